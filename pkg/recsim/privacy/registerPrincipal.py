#!/usr/bin/env python3

# Define function ...
def registerPrincipal(
    graph,
    principalId,
    /,
):
    """Register a principal and open its original account

    Registering a principal twice returns its existing original account.

    Parameters
    ----------
    graph : dict
        the account graph
    principalId : str
        the identifier of the consumer or supplier

    Returns
    -------
    accountId : str
        the original account of the principal
    """

    # Import sub-functions ...
    from .newAccount import newAccount

    # **************************************************************************

    # Open the original account (if needed) ...
    if principalId not in graph["principals"]:
        graph["principals"][principalId] = newAccount(graph, "original", principalId)
        graph["proxies"][principalId] = []
        graph["history"][principalId] = []

    # Return answer ...
    return graph["principals"][principalId]
