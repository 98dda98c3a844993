#!/usr/bin/env python3

# Define function ...
def classify(
    graph,
    principal,
    amount,
    activity,
    stats,
    /,
):
    """Decide which kind of account a transaction is routed through

    Parameters
    ----------
    graph : dict
        the account graph
    principal : str
        the principal that makes the transaction
    amount : int
        the amount of the transaction
    activity : int
        the recent activity of the principal
    stats : dict
        the statistics of the slot

    Returns
    -------
    decision : str
        "original", "empty" or "proxy"
    """

    # Check input ...
    if principal not in graph["principals"]:
        raise KeyError(f"\"{principal}\" is not a registered principal") from None

    # Return answer ...
    if amount <= stats["uAmount"]:
        return "original"
    if activity <= stats["uActivity"]:
        return "empty"
    return "proxy"
