#!/usr/bin/env python3

# Define function ...
def slotTime(
    slot,
    /,
    *,
         epoch = None,
    slotLength = None,
):
    """Convert a slot index to a ledger timestamp

    Parameters
    ----------
    slot : int
        the index of the hourly slot
    epoch : int, optional
        the timestamp of the start of slot 0 (in seconds); defaults to
        2021-01-01T00:00:00Z
    slotLength : int, optional
        the length of a slot (in seconds); defaults to one hour

    Returns
    -------
    stamp : int
        the timestamp of the start of the slot (in seconds)
    """

    # Import my modules ...
    from .. import EPOCH, SLOT_SECONDS

    # **************************************************************************

    # Populate default values ...
    if epoch is None:
        epoch = EPOCH
    if slotLength is None:
        slotLength = SLOT_SECONDS

    # Return answer ...
    return int(epoch) + int(slot) * int(slotLength)
