#!/usr/bin/env python3

# Define function ...
def penaltyFee(
    consumer,
    slot,
    /,
    *,
    cumulative = True,
):
    """Find the penalty fee of a consumer that misses its green ratio target

    Parameters
    ----------
    consumer : dict
        the consumer
    slot : int
        the slot
    cumulative : bool, optional
        use the year-to-date energy rather than the energy of the slot

    Returns
    -------
    fee : float
        the penalty fee
    """

    # Import sub-functions ...
    from .greenRatio import greenRatio

    # **************************************************************************

    # Find the lag ...
    _, lag = greenRatio(consumer, slot, cumulative = cumulative)

    # Return answer ...
    return lag * consumer["gamma"]
