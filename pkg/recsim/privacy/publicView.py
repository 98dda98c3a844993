#!/usr/bin/env python3

# Define function ...
def publicView(
    graph,
    /,
):
    """Make the public view of an account graph

    The view lists every account that has traded with its kind and its total
    volume. It never lists owners.

    Parameters
    ----------
    graph : dict
        the account graph

    Returns
    -------
    view : list of dict
        the accounts, sorted by identifier
    """

    # Return answer ...
    return [
        {
              "accountId" : accountId,
                   "kind" : graph["accounts"][accountId]["kind"],
            "totalVolume" : volume,
        }
        for accountId, volume in sorted(graph["volume"].items())
        if volume > 0
    ]
