#!/usr/bin/env python3

# Define function ...
def makeAccountGraph(
    rng,
    /,
):
    """Make an empty account graph

    The graph links every principal to its accounts privately. Only the
    per-account volumes (see "publicView()") are ever published.

    Parameters
    ----------
    rng : numpy.random.Generator
        the random number generator used to draw account identifiers

    Returns
    -------
    graph : dict
        the account graph
    """

    # Return answer ...
    return {
        "principals" : {},
          "accounts" : {},
           "proxies" : {},
            "volume" : {},
           "history" : {},
               "rng" : rng,
    }
