#!/usr/bin/env python3

# Define function ...
def makeNode(
    nodeId,
    /,
    *,
           now = 0,
    reputation = 1.0,
):
    """Make a validator node

    Parameters
    ----------
    nodeId : str
        the identifier of the node
    now : int, optional
        the slot that the node joins in
    reputation : float, optional
        the initial activity reputation

    Returns
    -------
    node : dict
        the node
    """

    # Check input ...
    if reputation < 0.0:
        raise ValueError(f"the reputation of \"{nodeId}\" must be non-negative (not {reputation:g})") from None

    # Return answer ...
    return {
            "nodeId" : nodeId,
         "rActivity" : float(reputation),
        "lastActive" : now,
         "decayedTo" : now,
          "isolated" : False,
           "opinion" : "undecided",
    }
