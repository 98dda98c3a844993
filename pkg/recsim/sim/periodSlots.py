#!/usr/bin/env python3

# Define function ...
def periodSlots(
    period,
    /,
):
    """Find the slots that a monthly period covers

    Parameters
    ----------
    period : str
        the period, as "YYYY-MM"

    Returns
    -------
    first : int
        the first slot of the period
    count : int
        the number of slots in the period
    """

    # Import standard modules ...
    import re

    # Import special modules ...
    try:
        import pandas
    except:
        raise Exception("\"pandas\" is not installed; run \"pip install --user pandas\"") from None

    # Import my modules ...
    from .. import EPOCH, SLOT_SECONDS

    # **************************************************************************

    # Check input ...
    if not isinstance(period, str) or re.fullmatch(r"[0-9]{4}-[0-9]{2}", period) is None:
        raise ValueError(f"\"{period}\" is not a \"YYYY-MM\" period") from None

    # Parse the period ...
    try:
        month = pandas.Period(period, freq = "M")
    except ValueError:
        raise ValueError(f"\"{period}\" is not a \"YYYY-MM\" period") from None
    offset = (month.start_time - pandas.Timestamp(EPOCH, unit = "s")).total_seconds()   # [s]
    if offset < 0.0:
        raise ValueError(f"\"{period}\" is before the start of the simulation") from None

    # Return answer ...
    return int(offset) // SLOT_SECONDS, month.days_in_month * 86400 // SLOT_SECONDS
