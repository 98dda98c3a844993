#!/usr/bin/env python3

# Define function ...
def sampleQuorum(
    nodes,
    size,
    rng,
    /,
):
    """Sample a quorum from the connected nodes

    This function samples nodes without replacement with a probability that
    is proportional to their reputation. Isolated nodes are never sampled. If
    fewer nodes than needed have a positive reputation then all of them are
    taken and the rest of the quorum is drawn uniformly from the nodes with
    no reputation.

    Parameters
    ----------
    nodes : dict
        the nodes, keyed by identifier
    size : int
        the size of the quorum
    rng : numpy.random.Generator
        the random number generator

    Returns
    -------
    quorum : list of dict
        the sampled nodes
    """

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # **************************************************************************

    # Find the connected nodes ...
    active = [node for node in nodes.values() if not node["isolated"]]
    if len(active) < size:
        raise ValueError(f"a quorum of {size:,d} nodes cannot be drawn from {len(active):,d} connected nodes") from None

    # Split them by reputation ...
    reps = numpy.array([node["rActivity"] for node in active], dtype = numpy.float64)
    positive = numpy.flatnonzero(reps > 0.0)
    zero = numpy.flatnonzero(reps <= 0.0)

    # Draw the quorum ...
    if positive.size >= size:
        idx = rng.choice(
            positive,
            p = reps[positive] / reps[positive].sum(),
            replace = False,
            size = size,
        )
    else:
        idx = numpy.concatenate(
            [
                positive,
                rng.choice(zero, replace = False, size = size - positive.size),
            ]
        )

    # Return answer ...
    return [active[int(i)] for i in idx]
