#!/usr/bin/env python3

# Define function ...
def routeTransaction(
    graph,
    decision,
    principal,
    quantity,
    stats,
    /,
    *,
    maxProxies = 5,
):
    """Route a transaction through the accounts of a principal

    An original route uses the original account and an empty route opens a
    fresh single-use account. A proxy route aims for k = ceil(quantity /
    average amount) persistent proxy accounts (at most "maxProxies"): every
    leg takes ceil(quantity / k) and the last one takes what is left. This can
    use fewer than k accounts (6 certificates aimed at 4 accounts go 2, 2, 2
    over 3 of them).

    Parameters
    ----------
    graph : dict
        the account graph
    decision : str
        the decision from "classify()"
    principal : str
        the principal that makes the transaction
    quantity : int
        the number of certificates
    stats : dict
        the statistics of the slot
    maxProxies : int, optional
        the largest number of proxy accounts that one transaction is spread
        over

    Returns
    -------
    legs : list of tuple
        the (account, quantity) legs of the transaction
    """

    # Import standard modules ...
    import math

    # Import sub-functions ...
    from .newAccount import newAccount

    # **************************************************************************

    # Check input ...
    if principal not in graph["principals"]:
        raise KeyError(f"\"{principal}\" is not a registered principal") from None

    # Handle the simple routes ...
    if decision == "original":
        return [(graph["principals"][principal], quantity)]
    if decision == "empty":
        return [(newAccount(graph, "empty", principal), quantity)]
    if decision != "proxy":
        raise ValueError(f"\"{decision}\" is not a routing decision") from None

    # Split the quantity into even chunks ...
    k = max(1, min(maxProxies, math.ceil(quantity / stats["uAmount"])))
    size = math.ceil(quantity / k)
    chunks = []
    left = quantity
    while left > 0:
        chunks.append(min(size, left))
        left -= chunks[-1]

    # Open more proxy accounts (if needed) ...
    proxies = graph["proxies"][principal]
    while len(proxies) < len(chunks):
        proxies.append(newAccount(graph, "proxy", principal))

    # Return answer ...
    return list(zip(proxies, chunks))
