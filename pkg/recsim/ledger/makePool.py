#!/usr/bin/env python3

# Define function ...
def makePool(
    *,
    capacityBytes = None,
):
    """Make an empty transaction pool

    Parameters
    ----------
    capacityBytes : int, optional
        the size at which the pool is packed into a block (in bytes); defaults
        to 1 MiB

    Returns
    -------
    pool : dict
        the pool
    """

    # Import my modules ...
    from .. import POOL_CAPACITY_BYTES

    # **************************************************************************

    # Populate default values ...
    if capacityBytes is None:
        capacityBytes = POOL_CAPACITY_BYTES

    # Check input ...
    if capacityBytes < 1:
        raise ValueError(f"the pool capacity must be positive (not {capacityBytes:d} bytes)") from None

    # Return answer ...
    return {
              "pending" : [],
             "byteSize" : 0,
        "capacityBytes" : int(capacityBytes),
                "txIds" : set(),
    }
