#!/usr/bin/env python3

# Define function ...
def makeClock(
    tMax,
    /,
):
    """Make a market clock

    Parameters
    ----------
    tMax : int
        the number of slots from the start of the compliance period to its
        deadline

    Returns
    -------
    clock : dict
        the clock (at slot 0, with no observed price yet)
    """

    # Check input ...
    if tMax < 1:
        raise ValueError(f"the compliance period must be at least one slot (not {tMax:d})") from None

    # Return answer ...
    return {
           "slot" : 0,
           "tMax" : int(tMax),
        "tRemain" : int(tMax),
           "pMax" : None,
    }
