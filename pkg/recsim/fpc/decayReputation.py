#!/usr/bin/env python3

# Define function ...
def decayReputation(
    node,
    now,
    /,
    *,
    lam = 0.2,
):
    """Decay the activity reputation of a node

    This function multiplies the reputation by exp(-lam * delta), where delta
    is the time since the node was last active. Only the part of delta that
    has not been applied by an earlier call is applied, so calling this
    function every slot composes to the same decay as one call at the end.
    Isolated nodes are frozen.

    Parameters
    ----------
    node : dict
        the node
    now : int
        the current slot
    lam : float, optional
        the decay constant (per slot)

    Returns
    -------
    node : dict
        the node (updated in place)
    """

    # Import standard modules ...
    import math

    # **************************************************************************

    # Check input ...
    if now < node["lastActive"]:
        raise ValueError(f"\"{node['nodeId']}\" was last active at {node['lastActive']} which is after {now}") from None

    # Check if the node is frozen ...
    if node["isolated"]:
        return node

    # Apply the outstanding decay ...
    start = max(node["lastActive"], node["decayedTo"])
    if now > start:
        node["rActivity"] *= math.exp(-lam * (now - start))
        node["decayedTo"] = now

    # Return answer ...
    return node
