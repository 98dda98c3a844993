#!/usr/bin/env python3

# Define function ...
def txTime(
    model,
    ledgerSize,
    greenRatio,
    /,
    *,
    jitter = 0.0,
       rng = None,
):
    """Simulate the validation time of one REC transaction

    Parameters
    ----------
    model : dict
        the cost model
    ledgerSize : int
        the size of the ledger (in blocks)
    greenRatio : float
        the green ratio target of the market
    jitter : float, optional
        the sigma of a multiplicative log-normal noise term (zero disables
        the noise)
    rng : numpy.random.Generator, optional
        the random number generator (only needed when there is noise)

    Returns
    -------
    seconds : float
        the validation time (in seconds)
    """

    # Import sub-functions ...
    from .greenMultiplier import greenMultiplier
    from .scaleFactor import scaleFactor

    # **************************************************************************

    # Find the time ...
    seconds = model["baseTime"] * model["units"] * scaleFactor(model["ledgerScaling"], ledgerSize) * greenMultiplier(greenRatio)

    # Add noise (if needed) ...
    if jitter > 0.0:
        if rng is None:
            raise ValueError("a random number generator is needed to add noise") from None
        seconds *= rng.lognormal(0.0, jitter)

    # Return answer ...
    return seconds
