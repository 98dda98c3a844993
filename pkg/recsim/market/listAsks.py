#!/usr/bin/env python3

# Define function ...
def listAsks(
    supplier,
    now,
    /,
    *,
    depth = 24,
      seq = 0,
):
    """List the asks of a supplier

    One ask is listed per batch, oldest batch first, for at most "depth"
    batches.

    Parameters
    ----------
    supplier : dict
        the supplier
    now : int
        the current slot
    depth : int, optional
        the maximum number of batches to list
    seq : int, optional
        the sequence number of the first ask

    Returns
    -------
    asks : list of dict
        the asks
    """

    # Import sub-functions ...
    from .askPrice import askPrice
    from .makeOrder import makeOrder

    # **************************************************************************

    # Initialize list ...
    asks = []
    lo, hi = supplier["priceBounds"]
    account = supplier["did"] or supplier["supplierId"]

    # Loop over batches ...
    for batch in supplier["inventory"][:depth]:
        # Skip empty or expired batches ...
        if not batch["certs"]:
            continue
        price = askPrice(supplier, batch["certs"][0], now)
        if batch["certs"][0]["retired"]:
            continue

        # Make the ask ...
        ask = makeOrder(
            "ask",
            account,
            min(max(price, lo), hi),
            len(batch["certs"]),
            now,
            seq = seq + len(asks),
        )
        ask["supplierId"] = supplier["supplierId"]
        ask["source"] = supplier["source"]
        ask["batch"] = batch
        asks.append(ask)

    # Return answer ...
    return asks
