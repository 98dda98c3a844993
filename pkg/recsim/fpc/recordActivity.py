#!/usr/bin/env python3

# Define function ...
def recordActivity(
    node,
    active,
    now,
    /,
):
    """Record whether a node took part in an interaction

    An active node gains one unit of reputation and becomes last active now.
    An inactive node is left alone (its reputation decays at the next call to
    :func:`decayReputation`). An isolated node is frozen and gains nothing.

    Parameters
    ----------
    node : dict
        the node
    active : bool or int
        whether the node took part
    now : int
        the current slot

    Returns
    -------
    node : dict
        the node (updated in place)
    """

    # Check if the node is frozen or idle ...
    if node["isolated"] or not active:
        return node

    # Credit the node ...
    node["rActivity"] += 1.0
    node["lastActive"] = now
    node["decayedTo"] = max(node["decayedTo"], now)

    # Return answer ...
    return node
