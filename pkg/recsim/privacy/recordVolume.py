#!/usr/bin/env python3

# Define function ...
def recordVolume(
    graph,
    principal,
    legs,
    slot,
    /,
):
    """Record a settled transaction against its accounts

    Parameters
    ----------
    graph : dict
        the account graph
    principal : str
        the principal that made the transaction
    legs : list of tuple
        the (account, quantity) legs of the transaction
    slot : int
        the slot of the transaction
    """

    # Check input ...
    if principal not in graph["principals"]:
        raise KeyError(f"\"{principal}\" is not a registered principal") from None

    # Add the volumes ...
    for accountId, quantity in legs:
        if accountId not in graph["volume"]:
            raise KeyError(f"\"{accountId}\" is not an account") from None
        graph["volume"][accountId] += quantity

    # Add the transaction to the history ...
    graph["history"][principal].append(int(slot))
