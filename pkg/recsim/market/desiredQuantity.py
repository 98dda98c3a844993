#!/usr/bin/env python3

# Define function ...
def desiredQuantity(
    consumer,
    clock,
    slot,
    /,
    *,
      bidPrice = None,
    cumulative = True,
):
    """Find how many certificates a consumer wants at a bid price

    The quantity grows linearly with the bid price, up to the per-slot maximum
    when the bid price reaches the highest price seen last slot, and is capped
    by the penalty that the consumer is trying to avoid. An array of bid
    prices gives an array of quantities.

    Parameters
    ----------
    consumer : dict
        the consumer
    clock : dict
        the market clock (its "pMax" must be set)
    slot : int
        the slot
    bidPrice : float or numpy.ndarray, optional
        the bid price(s); defaults to the current bid price of the consumer
    cumulative : bool, optional
        use the year-to-date energy rather than the energy of the slot

    Returns
    -------
    quantity : int or numpy.ndarray
        the desired quantity (never negative)
    saturated : bool or numpy.ndarray
        the bid price exceeded the highest price seen last slot
    """

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # Import sub-functions ...
    from .greenRatio import greenRatio

    # **************************************************************************

    # Check input ...
    pMax = clock["pMax"]
    if pMax is None or pMax <= 0.0:
        raise ValueError("the highest price seen last slot is not known") from None

    # Populate default values ...
    if bidPrice is None:
        bidPrice = consumer["bidPrice"]
    price = numpy.asarray(bidPrice, dtype = numpy.float64)
    qMax = consumer["qMax"]

    # Find the raw quantity ...
    saturated = price > pMax
    raw = numpy.where(saturated, float(qMax), price * qMax / pMax)

    # Find the cap from the penalty ...
    if cumulative:
        consumption = float(consumer["cumConsumptionMwh"][slot])                # [MWh]
    else:
        consumption = float(consumer["consumptionMwh"][slot])                   # [MWh]
    _, lag = greenRatio(consumer, slot, cumulative = cumulative)
    fee = lag * consumer["gamma"]
    # NOTE: The cap is a currency amount but it is compared with a REC count as
    #       it stands; the min/max structure still gives a well-defined
    #       quantity.
    cap = consumer["greenTarget"] * consumption * consumer["gamma"] - fee

    # Find the quantity ...
    quantity = numpy.floor(numpy.maximum(0.0, numpy.minimum(raw, cap)) + 1.0e-9).astype(numpy.int64)

    # Return answer ...
    if price.ndim == 0:
        return int(quantity), bool(saturated)
    return quantity, saturated
