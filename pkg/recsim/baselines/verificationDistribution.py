#!/usr/bin/env python3

# Define function ...
def verificationDistribution(
    model,
    nNodes,
    nValidations,
    rng,
    /,
    *,
    activityRate = 0.5,
             lam = 0.2,
      quorumSize = 20,
):
    """Simulate which nodes carry out a run of validations

    For "pow" and "prism", each validation goes to a node with a probability
    proportional to its hash power; for "pos", to its stake. Both resources
    come from the same standard normal draw per node: stake is log-normal
    (sigma of one) and hash power is the Lomax (Pareto II, shape 1.5) quantile
    of the same draw, so the same nodes are rich under both. For "fpc_rep",
    the validations are split into reputation-weighted quorums, one per slot,
    with decay between slots and one unit of reputation for every slot in
    which a node is active in the network; the counts are then quorum
    participations.

    Parameters
    ----------
    model : dict
        the cost model
    nNodes : int
        the number of nodes
    nValidations : int
        the number of validations
    rng : numpy.random.Generator
        the random number generator
    activityRate : float, optional
        the chance that a node is active in the network during a slot, which
        earns it one unit of reputation ("fpc_rep" only)
    lam : float, optional
        the reputation decay constant (per slot; "fpc_rep" only)
    quorumSize : int, optional
        the quorum size ("fpc_rep" only)

    Returns
    -------
    counts : numpy.ndarray
        the number of validations per node (summing to nValidations)
    """

    # Import standard modules ...
    import math

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # Import my modules ...
    from ..fpc import decayReputation, makeNodes, recordActivity, sampleQuorum

    # **************************************************************************

    # Check input ...
    if nNodes < 1:
        raise ValueError(f"there must be at least one node (not {nNodes:d})") from None
    if nValidations < 1:
        raise ValueError(f"there must be at least one validation (not {nValidations:d})") from None

    # Check if this is a resource-weighted kind ...
    if model["kind"] in ("pow", "prism", "pos"):
        # Draw the resources ...
        z = rng.standard_normal(nNodes)
        if model["kind"] == "pos":
            if model["stakeDistribution"] is not None:
                if model["stakeDistribution"].size != nNodes:
                    raise ValueError(f"the stake distribution has {model['stakeDistribution'].size:,d} entries but there are {nNodes:,d} nodes") from None
                weights = model["stakeDistribution"].copy()
            else:
                weights = numpy.exp(z)
        else:
            # NOTE: The survival function of the standard normal is
            #       0.5 * erfc(z / sqrt(2)).
            survival = numpy.array([0.5 * math.erfc(val / math.sqrt(2.0)) for val in z])
            survival = numpy.clip(survival, 1.0e-300, 1.0)
            weights = survival ** (-1.0 / 1.5) - 1.0

        # Assign the validations ...
        return rng.multinomial(nValidations, weights / weights.sum())

    # Check if this is not a reputation-weighted kind ...
    if model["kind"] != "fpc_rep":
        raise ValueError(f"\"{model['kind']}\" is not a known consensus kind") from None

    # Create the network ...
    nodes = makeNodes(nNodes)
    index = {nodeId : i for i, nodeId in enumerate(nodes)}
    counts = numpy.zeros(nNodes, dtype = numpy.int64)

    # Find the quorum sizes ...
    size = min(quorumSize, nNodes)
    nFull, remainder = divmod(nValidations, size)
    sizes = [size] * nFull
    if remainder > 0:
        sizes.append(remainder)

    # Loop over slots ...
    for now, size in enumerate(sizes):
        # Decay reputations and credit the nodes that were active in the
        # network during the slot ...
        active = rng.random(nNodes) < activityRate
        for node, isActive in zip(nodes.values(), active, strict = True):
            decayReputation(node, now, lam = lam)
            recordActivity(node, bool(isActive), now)

        # Draw the quorum ...
        for member in sampleQuorum(nodes, size, rng):
            counts[index[member["nodeId"]]] += 1

    # Return answer ...
    return counts
