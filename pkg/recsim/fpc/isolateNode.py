#!/usr/bin/env python3

# Define function ...
def isolateNode(
    nodes,
    nodeId,
    /,
):
    """Disconnect a node from the network

    Isolated nodes are never sampled into a quorum again. Isolating a node
    twice has no further effect.

    Parameters
    ----------
    nodes : dict
        the nodes, keyed by identifier
    nodeId : str
        the identifier of the node to isolate

    Returns
    -------
    nodes : dict
        the nodes (updated in place)
    """

    # Check input ...
    if nodeId not in nodes:
        raise KeyError(f"there is no node called \"{nodeId}\"") from None

    # Isolate node ...
    nodes[nodeId]["isolated"] = True

    # Return answer ...
    return nodes
