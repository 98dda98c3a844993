#!/usr/bin/env python3

# Define function ...
def makeMarket(
    suppliers,
    consumers,
    /,
):
    """Make a market from its participants

    Parameters
    ----------
    suppliers : list of dict
        the suppliers
    consumers : list of dict
        the consumers

    Returns
    -------
    market : dict
        the market
    """

    # Return answer ...
    return {
        "suppliers" : {supplier["supplierId"] : supplier for supplier in suppliers},
        "consumers" : {consumer["consumerId"] : consumer for consumer in consumers},
          "settled" : set(),
            "audit" : [],
    }
