#!/usr/bin/env python3

# Define function ...
def makeSupplier(
    supplierId,
    source,
    surplusMwh,
    /,
    *,
    initialPrice = 100.0,
        lifetime = None,
     priceBounds = (10.0, 200.0),
):
    """Make a REC supplier

    Parameters
    ----------
    supplierId : str
        the identifier of the supplier
    source : str
        the renewable source of the supplier
    surplusMwh : numpy.ndarray
        the surplus renewable energy in each slot (in MWh)
    initialPrice : float, optional
        the base price of a fresh certificate before any scarcity pricing
    lifetime : int, optional
        the lifetime of a certificate (in slots); defaults to one year
    priceBounds : tuple of float, optional
        the lowest and highest prices that the supplier will ask

    Returns
    -------
    supplier : dict
        the supplier
    """

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # Import my modules ...
    from .. import SLOTS_PER_YEAR, SOURCES

    # **************************************************************************

    # Populate default values ...
    if lifetime is None:
        lifetime = SLOTS_PER_YEAR

    # Check input ...
    surplusMwh = numpy.asarray(surplusMwh, dtype = numpy.float64)
    if source not in SOURCES:
        raise ValueError(f"\"{source}\" is not a renewable source") from None
    if (surplusMwh < 0.0).any():
        raise ValueError(f"\"{supplierId}\" has a negative surplus") from None
    if not 0.0 <= priceBounds[0] <= priceBounds[1]:
        raise ValueError(f"the price bounds of \"{supplierId}\" are not ordered") from None
    if lifetime < 1:
        raise ValueError(f"the certificate lifetime must be at least one slot (not {lifetime:d})") from None

    # Return answer ...
    return {
          "supplierId" : supplierId,
              "source" : source,
                 "did" : None,
          "surplusMwh" : surplusMwh,
            "carryMwh" : 0.0,
        "initialPrice" : float(initialPrice),
           "basePrice" : float(initialPrice),
         "priceBounds" : (float(priceBounds[0]), float(priceBounds[1])),
            "lifetime" : int(lifetime),
           "inventory" : [],
              "minted" : 0,
             "retired" : 0,
              "tokens" : 0.0,
    }
