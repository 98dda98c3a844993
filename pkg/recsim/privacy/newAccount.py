#!/usr/bin/env python3

# Define function ...
def newAccount(
    graph,
    kind,
    owner,
    /,
):
    """Open a new account

    Parameters
    ----------
    graph : dict
        the account graph
    kind : str
        either "original", "proxy" or "empty"
    owner : str
        the principal that owns the account (kept private)

    Returns
    -------
    accountId : str
        the identifier of the account
    """

    # Check input ...
    if kind not in ("original", "proxy", "empty"):
        raise ValueError(f"\"{kind}\" is not an account kind") from None

    # Draw an unused identifier ...
    while True:
        accountId = "acct-" + graph["rng"].bytes(8).hex()
        if accountId not in graph["accounts"]:
            break

    # Store the account ...
    graph["accounts"][accountId] = {
         "accountId" : accountId,
              "kind" : kind,
             "owner" : owner,
        "tombstoned" : False,
    }
    graph["volume"][accountId] = 0

    # Return answer ...
    return accountId
