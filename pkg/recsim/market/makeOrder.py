#!/usr/bin/env python3

# Define function ...
def makeOrder(
    side,
    account,
    price,
    quantity,
    slot,
    /,
    *,
    seq = 0,
):
    """Make an order

    Parameters
    ----------
    side : str
        either "ask" or "bid"
    account : str
        the account that placed the order
    price : float
        the price per REC
    quantity : int
        the number of RECs
    slot : int
        the slot of the order
    seq : int, optional
        the submission sequence number (lower is earlier)

    Returns
    -------
    order : dict
        the order
    """

    # Check input ...
    if side not in ("ask", "bid"):
        raise ValueError(f"\"{side}\" is not an order side") from None
    if price < 0.0:
        raise ValueError(f"the price of an order must be non-negative (not {price:g})") from None
    if quantity < 1:
        raise ValueError(f"the quantity of an order must be at least 1 (not {quantity:d})") from None

    # Return answer ...
    return {
            "side" : side,
         "account" : account,
           "price" : float(price),
        "quantity" : int(quantity),
            "slot" : int(slot),
             "seq" : int(seq),
    }
