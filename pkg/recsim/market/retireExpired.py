#!/usr/bin/env python3

# Define function ...
def retireExpired(
    supplier,
    now,
    /,
):
    """Retire the expired batches of a supplier

    Parameters
    ----------
    supplier : dict
        the supplier
    now : int
        the current slot

    Returns
    -------
    count : int
        the number of certificates that were retired
    """

    # Import sub-functions ...
    from .remainingLifetime import remainingLifetime

    # **************************************************************************

    # Initialize counter ...
    count = 0

    # NOTE: Batches are stored oldest first, so the first live batch ends the
    #       search.
    while supplier["inventory"]:
        batch = supplier["inventory"][0]
        if batch["certs"] and remainingLifetime(batch["certs"][0], now) > 0:
            break
        for cert in batch["certs"]:
            cert["retired"] = True
        count += len(batch["certs"])
        del supplier["inventory"][0]

    # Update the tally ...
    supplier["retired"] += count

    # Return answer ...
    return count
