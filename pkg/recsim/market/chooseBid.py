#!/usr/bin/env python3

# Define function ...
def chooseBid(
    consumer,
    clock,
    slot,
    /,
    *,
    cumulative = True,
         nGrid = 100,
):
    """Choose the bid of a consumer

    A consumer that already meets its target does not bid. Otherwise a grid of
    bid prices spanning its bid bounds is searched for the cheapest bid (by
    the bid cost) that buys enough to close the shortfall, or at least one
    certificate if no price on the grid buys that much. Ties go to the lowest
    price.

    Parameters
    ----------
    consumer : dict
        the consumer
    clock : dict
        the market clock
    slot : int
        the slot
    cumulative : bool, optional
        use the year-to-date energy rather than the energy of the slot
    nGrid : int, optional
        the number of bid prices in the grid

    Returns
    -------
    bid : dict or None
        the chosen price, quantity, shortfall (in whole certificates) and cost
    """

    # Import standard modules ...
    import math

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # Import sub-functions ...
    from .bidCost import bidCost
    from .desiredQuantity import desiredQuantity
    from .greenRatio import greenRatio

    # **************************************************************************

    # Check if the consumer needs to bid ...
    _, lag = greenRatio(consumer, slot, cumulative = cumulative)
    if lag <= 0.0:
        return None

    # Find the shortfall in whole certificates ...
    if cumulative:
        consumption = float(consumer["cumConsumptionMwh"][slot])                # [MWh]
    else:
        consumption = float(consumer["consumptionMwh"][slot])                   # [MWh]
    need = max(1, math.ceil(round(lag * consumption, 9)))
    wanted = max(1, min(need, consumer["qMax"]))

    # Evaluate the grid ...
    lo, hi = consumer["bidBounds"]
    grid = numpy.linspace(lo, hi, nGrid)
    quantity, _ = desiredQuantity(consumer, clock, slot, bidPrice = grid, cumulative = cumulative)
    cost = bidCost(consumer, clock, slot, bidPrice = grid, cumulative = cumulative, quantity = quantity)

    # Find the feasible prices ...
    feasible = quantity >= wanted
    if not feasible.any():
        feasible = quantity >= 1
        if not feasible.any():
            return None

    # NOTE: "numpy.argmin()" returns the first minimum, which is the lowest
    #       price.
    i = int(numpy.argmin(numpy.where(feasible, cost, numpy.inf)))
    consumer["bidPrice"] = float(grid[i])

    # Return answer ...
    return {
           "price" : float(grid[i]),
        "quantity" : int(min(quantity[i], need)),
            "need" : need,
            "cost" : float(cost[i]),
    }
