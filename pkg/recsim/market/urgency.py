#!/usr/bin/env python3

# Define function ...
def urgency(
    consumer,
    clock,
    slot,
    /,
    *,
           cap = 100.0,
    cumulative = True,
):
    """Find how urgently a consumer needs certificates

    Parameters
    ----------
    consumer : dict
        the consumer
    clock : dict
        the market clock
    slot : int
        the slot
    cap : float, optional
        the highest urgency
    cumulative : bool, optional
        use the year-to-date energy rather than the energy of the slot

    Returns
    -------
    alpha : float
        the urgency
    capped : bool
        the urgency was capped (a consumer with no renewable energy at all is
        always capped)
    """

    # Import sub-functions ...
    from .greenRatio import greenRatio

    # **************************************************************************

    # Check input ...
    if clock["tRemain"] < 1:
        raise ValueError(f"the compliance deadline has passed (tRemain = {clock['tRemain']:d})") from None

    # Find the ratio ...
    ratio, _ = greenRatio(consumer, slot, cumulative = cumulative)
    if ratio <= 0.0:
        return cap, True

    # Find the urgency ...
    alpha = (clock["tMax"] / clock["tRemain"]) * (consumer["greenTarget"] / ratio)
    if alpha > cap:
        return cap, True

    # Return answer ...
    return alpha, False
