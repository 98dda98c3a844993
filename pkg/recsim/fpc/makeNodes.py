#!/usr/bin/env python3

# Define function ...
def makeNodes(
    nNodes,
    /,
    *,
           now = 0,
        prefix = "v",
    reputation = 1.0,
):
    """Make a network of validator nodes

    Parameters
    ----------
    nNodes : int
        the number of nodes
    now : int, optional
        the slot that the nodes join in
    prefix : str, optional
        the prefix of the node identifiers
    reputation : float, optional
        the initial activity reputation of every node

    Returns
    -------
    nodes : dict
        the nodes, keyed by identifier
    """

    # Import sub-functions ...
    from .makeNode import makeNode

    # **************************************************************************

    # Create short-hand ...
    width = len(f"{max(nNodes - 1, 0):d}")

    # Return answer ...
    return {
        f"{prefix}{i:0{width}d}" : makeNode(f"{prefix}{i:0{width}d}", now = now, reputation = reputation)
        for i in range(nNodes)
    }
