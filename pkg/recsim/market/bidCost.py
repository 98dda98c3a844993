#!/usr/bin/env python3

# Define function ...
def bidCost(
    consumer,
    clock,
    slot,
    /,
    *,
      bidPrice = None,
    cumulative = True,
      quantity = None,
):
    """Find the cost of a bid to a consumer

    The cost is what the consumer pays for the certificates plus a quadratic
    term that grows with the penalty, the urgency and the shortfall.

    Parameters
    ----------
    consumer : dict
        the consumer
    clock : dict
        the market clock
    slot : int
        the slot
    bidPrice : float or numpy.ndarray, optional
        the bid price(s); defaults to the current bid price of the consumer
    cumulative : bool, optional
        use the year-to-date energy rather than the energy of the slot
    quantity : int or numpy.ndarray, optional
        the quantity (or quantities); defaults to the desired quantity at the
        bid price(s)

    Returns
    -------
    cost : float or numpy.ndarray
        the cost
    """

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # Import sub-functions ...
    from .desiredQuantity import desiredQuantity
    from .greenRatio import greenRatio
    from .urgency import urgency

    # **************************************************************************

    # Populate default values ...
    if bidPrice is None:
        bidPrice = consumer["bidPrice"]
    if quantity is None:
        quantity, _ = desiredQuantity(consumer, clock, slot, bidPrice = bidPrice, cumulative = cumulative)
    price = numpy.asarray(bidPrice, dtype = numpy.float64)
    quantity = numpy.asarray(quantity, dtype = numpy.float64)

    # Find the terms ...
    if cumulative:
        consumption = float(consumer["cumConsumptionMwh"][slot])                # [MWh]
    else:
        consumption = float(consumer["consumptionMwh"][slot])                   # [MWh]
    _, lag = greenRatio(consumer, slot, cumulative = cumulative)
    fee = lag * consumer["gamma"]
    alpha, _ = urgency(consumer, clock, slot, cumulative = cumulative)

    # Find the cost ...
    cost = price * quantity + fee * (alpha * lag * consumption + quantity) ** 2

    # Return answer ...
    if cost.ndim == 0:
        return float(cost)
    return cost
