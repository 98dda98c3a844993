#!/usr/bin/env python3

# Define function ...
def matchOrdersExhaustive(
    asks,
    bids,
    /,
):
    """Find the matching of a small book that maximizes the total surplus

    Every feasible assignment of quantities to crossing (bid, ask) pairs is
    enumerated, so this is only practical for books with a handful of small
    orders.

    Parameters
    ----------
    asks : list of dict
        the asks
    bids : list of dict
        the bids

    Returns
    -------
    surplus : float
        the largest total of quantity times (bid price - ask price)
    allocation : dict
        the quantity assigned to each (bid index, ask index) pair that trades
    """

    # Find the pairs that cross ...
    pairs = [
        (i, j)
        for i, bid in enumerate(bids)
        for j, ask in enumerate(asks)
        if bid["price"] >= ask["price"]
    ]

    # Initialize state ...
    remA = [ask["quantity"] for ask in asks]
    remB = [bid["quantity"] for bid in bids]
    best = {"surplus" : 0.0, "allocation" : {}}
    allocation = {}

    # Define a depth-first search over the pairs ...
    def search(k, surplus):
        if k == len(pairs):
            if surplus > best["surplus"] + 1.0e-12:
                best["surplus"] = surplus
                best["allocation"] = {key : val for key, val in allocation.items() if val > 0}
            return
        i, j = pairs[k]
        margin = bids[i]["price"] - asks[j]["price"]
        for x in range(min(remB[i], remA[j]), -1, -1):
            remB[i] -= x
            remA[j] -= x
            allocation[(i, j)] = x
            search(k + 1, surplus + x * margin)
            remB[i] += x
            remA[j] += x
        del allocation[(i, j)]

    # Search ...
    search(0, 0.0)

    # Return answer ...
    return best["surplus"], best["allocation"]
