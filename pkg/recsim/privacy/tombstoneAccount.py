#!/usr/bin/env python3

# Define function ...
def tombstoneAccount(
    graph,
    accountId,
    /,
):
    """Close a single-use account and forget its owner

    Parameters
    ----------
    graph : dict
        the account graph
    accountId : str
        the account
    """

    # Check input ...
    if accountId not in graph["accounts"]:
        raise KeyError(f"\"{accountId}\" is not an account") from None
    account = graph["accounts"][accountId]
    if account["kind"] != "empty":
        raise ValueError(f"\"{accountId}\" is a {account['kind']} account, only empty accounts are single-use") from None

    # Close the account ...
    account["owner"] = None
    account["tombstoned"] = True
