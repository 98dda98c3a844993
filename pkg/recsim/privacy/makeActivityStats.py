#!/usr/bin/env python3

# Define function ...
def makeActivityStats(
    graph,
    amounts,
    slot,
    /,
    *,
    window = 24,
):
    """Find the amount and activity statistics of a slot

    The activity of a principal is the number of trades that it made in the
    "window" slots before this one. Both averages are taken over the
    principals that trade in this slot.

    Parameters
    ----------
    graph : dict
        the account graph
    amounts : dict
        the number of certificates that each active principal trades in this
        slot
    slot : int
        the current slot
    window : int, optional
        the number of previous slots that count towards activity

    Returns
    -------
    stats : dict
        the statistics
    """

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # **************************************************************************

    # Find the active principals ...
    active = sorted(principal for principal, amount in amounts.items() if amount > 0)
    for principal in active:
        if principal not in graph["principals"]:
            raise KeyError(f"\"{principal}\" is not a registered principal") from None

    # Find the activity of each active principal ...
    activity = {
        principal : sum(1 for past in graph["history"][principal] if slot - window <= past < slot)
        for principal in active
    }

    # Find the averages ...
    uAmount = float(numpy.mean([amounts[principal] for principal in active])) if active else 0.0
    uActivity = float(numpy.mean([activity[principal] for principal in active])) if active else 0.0

    # Return answer ...
    return {
             "slot" : int(slot),
           "amount" : {principal : amounts[principal] for principal in active},
         "activity" : activity,
          "uAmount" : uAmount,
        "uActivity" : uActivity,
    }
