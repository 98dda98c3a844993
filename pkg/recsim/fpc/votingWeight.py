#!/usr/bin/env python3

# Define function ...
def votingWeight(
    node,
    quorum,
    /,
    *,
    total = None,
):
    """Find the voting weight of a node within a quorum

    The weight is the reputation of the node divided by the total reputation
    of the quorum, so the weights of a quorum sum to one.

    Parameters
    ----------
    node : dict
        the node
    quorum : list of dict
        the quorum
    total : float, optional
        the total reputation of the quorum (if already known)

    Returns
    -------
    weight : float
        the voting weight
    """

    # Find the total reputation (if needed) ...
    if total is None:
        total = sum(member["rActivity"] for member in quorum)

    # Check for a degenerate quorum ...
    if total <= 0.0:
        raise RuntimeError("the quorum has no reputation; draw another quorum") from None

    # Return answer ...
    return node["rActivity"] / total
