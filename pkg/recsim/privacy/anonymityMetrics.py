#!/usr/bin/env python3

# Define function ...
def anonymityMetrics(
    view,
    /,
):
    """Measure how evenly trading volume is spread over the public accounts

    Parameters
    ----------
    view : list of dict
        the public view

    Returns
    -------
    metrics : dict
        the (population) standard deviation of the per-account volume, the
        share of the largest account and the number of accounts
    """

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # **************************************************************************

    # Check input ...
    if not view:
        raise ValueError("the public view has no accounts") from None

    # Find the volumes ...
    volumes = numpy.array([account["totalVolume"] for account in view], dtype = numpy.float64)

    # Return answer ...
    return {
              "stddev" : float(volumes.std()),
            "topShare" : float(volumes.max() / volumes.sum()),
        "accountCount" : volumes.size,
    }
