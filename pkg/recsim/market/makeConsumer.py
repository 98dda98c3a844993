#!/usr/bin/env python3

# Define function ...
def makeConsumer(
    consumerId,
    consumptionMwh,
    ownRenewableMwh,
    greenTarget,
    /,
    *,
    bidBounds = (10.0, 200.0),
        gamma = 10000.0,
       tokens = 1.0e9,
):
    """Make a REC consumer

    Parameters
    ----------
    consumerId : str
        the identifier of the consumer
    consumptionMwh : numpy.ndarray
        the energy consumed in each slot (in MWh)
    ownRenewableMwh : numpy.ndarray
        the renewable energy generated (or bought from the utility) in each
        slot (in MWh)
    greenTarget : float
        the green ratio target
    bidBounds : tuple of float, optional
        the lowest and highest prices that the consumer will bid
    gamma : float, optional
        the unmet capacity (penalty) coefficient
    tokens : float, optional
        the initial token balance

    Returns
    -------
    consumer : dict
        the consumer
    """

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # **************************************************************************

    # Check input ...
    consumptionMwh = numpy.asarray(consumptionMwh, dtype = numpy.float64)
    ownRenewableMwh = numpy.asarray(ownRenewableMwh, dtype = numpy.float64)
    if consumptionMwh.shape != ownRenewableMwh.shape:
        raise ValueError(f"\"{consumerId}\" has mismatched consumption and renewable series") from None
    if (consumptionMwh < 0.0).any() or (ownRenewableMwh < 0.0).any():
        raise ValueError(f"\"{consumerId}\" has negative energy") from None
    if not 0.0 <= greenTarget <= 1.0:
        raise ValueError(f"the green ratio target of \"{consumerId}\" must be in [0, 1] (not {greenTarget:g})") from None
    if not 0.0 <= bidBounds[0] <= bidBounds[1]:
        raise ValueError(f"the bid bounds of \"{consumerId}\" are not ordered") from None

    # Return answer ...
    return {
                "consumerId" : consumerId,
                   "account" : consumerId,
                       "did" : None,
            "consumptionMwh" : consumptionMwh,
           "ownRenewableMwh" : ownRenewableMwh,
         "cumConsumptionMwh" : numpy.cumsum(consumptionMwh),
        "cumOwnRenewableMwh" : numpy.cumsum(ownRenewableMwh),
               "greenTarget" : float(greenTarget),
                 "bidBounds" : (float(bidBounds[0]), float(bidBounds[1])),
                  "bidPrice" : float(bidBounds[0]),
                      "qMax" : 1,
                     "gamma" : float(gamma),
                 "recsOwned" : 0,
                  "holdings" : [],
                  "expiring" : [],
               "penaltyPaid" : 0.0,
                    "tokens" : float(tokens),
    }
