#!/usr/bin/env python3

# Define function ...
def peekBlock(
    pool,
    /,
    *,
          flush = False,
    recordBytes = None,
):
    """Find the records that the next block would take from the pool

    Parameters
    ----------
    pool : dict
        the pool
    flush : bool, optional
        look at a pool that is not full yet
    recordBytes : int, optional
        the serialized size of one record (in bytes); defaults to 128

    Returns
    -------
    payload : list of dict or None
        the records, oldest first (None if nothing would be packed)
    """

    # Import my modules ...
    from .. import RECORD_BYTES

    # **************************************************************************

    # Populate default values ...
    if recordBytes is None:
        recordBytes = RECORD_BYTES

    # Check if there is nothing to do ...
    if not pool["pending"]:
        return None
    if not flush and pool["byteSize"] < pool["capacityBytes"]:
        return None

    # Return answer ...
    return pool["pending"][:pool["capacityBytes"] // recordBytes]
