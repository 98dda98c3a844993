#!/usr/bin/env python3

# Define function ...
def updateBasePrice(
    supplier,
    slot,
    meanSurplus,
    /,
    *,
    elasticity = 0.5,
):
    """Update the base price of a supplier from the scarcity of its source

    A supplier that generates less than the average supplier in a slot asks
    more, and one that generates more asks less. The price is clamped to the
    price bounds of the supplier and a supplier with no surplus asks the
    highest price.

    Parameters
    ----------
    supplier : dict
        the supplier
    slot : int
        the slot
    meanSurplus : float
        the mean surplus of all suppliers in the slot (in MWh)
    elasticity : float, optional
        the exponent of the scarcity ratio

    Returns
    -------
    price : float
        the new base price
    """

    # Find the surplus ...
    own = float(supplier["surplusMwh"][slot])                                   # [MWh]
    lo, hi = supplier["priceBounds"]

    # Find the price ...
    if own <= 0.0:
        price = hi
    else:
        price = supplier["initialPrice"] * (meanSurplus / own) ** elasticity

    # Clamp and store the price ...
    supplier["basePrice"] = min(max(price, lo), hi)

    # Return answer ...
    return supplier["basePrice"]
