#!/usr/bin/env python3

# Define function ...
def matchOrders(
    asks,
    bids,
    /,
):
    """Match asks against bids

    Bids are taken from the highest price down and asks from the lowest price
    up (ties go to the earlier submission and then to the lower account
    identifier). A trade executes at the ask price whenever the bid price is
    at least the ask price, for as many certificates as both orders have left.

    Parameters
    ----------
    asks : list of dict
        the asks
    bids : list of dict
        the bids

    Returns
    -------
    trades : list of dict
        the trades, in the order that they executed
    """

    # Sort the books ...
    asks = sorted(asks, key = lambda order: (order["price"], order["seq"], order["account"]))
    bids = sorted(bids, key = lambda order: (-order["price"], order["seq"], order["account"]))

    # Initialize counters and list ...
    remA = [ask["quantity"] for ask in asks]
    remB = [bid["quantity"] for bid in bids]
    i = 0
    j = 0
    trades = []

    # Loop until the books stop crossing ...
    while i < len(bids) and j < len(asks):
        bid = bids[i]
        ask = asks[j]
        if bid["price"] < ask["price"]:
            break

        # Execute the trade ...
        quantity = min(remB[i], remA[j])
        trades.append(
            {
                 "tradeId" : f"t{bid['slot']:06d}-{len(trades):04d}",
                    "slot" : bid["slot"],
                   "price" : ask["price"],
                "bidPrice" : bid["price"],
                "quantity" : quantity,
                     "ask" : ask,
                     "bid" : bid,
            }
        )
        remB[i] -= quantity
        remA[j] -= quantity

        # Move on from exhausted orders ...
        if remB[i] == 0:
            i += 1
        if remA[j] == 0:
            j += 1

    # Return answer ...
    return trades
