#!/usr/bin/env python3

# Define function ...
def txEnergy(
    model,
    ledgerSize,
    /,
    *,
    nTx = 1,
):
    """Simulate the energy used to validate REC transactions

    The energy is the work per transaction times the cost of one unit of work
    times the number of transactions. Only ratios between consensus kinds are
    meaningful.

    Parameters
    ----------
    model : dict
        the cost model
    ledgerSize : int
        the size of the ledger (in blocks)
    nTx : int, optional
        the number of transactions

    Returns
    -------
    energy : float
        the energy (in abstract work units)
    """

    # Import sub-functions ...
    from .scaleFactor import scaleFactor

    # **************************************************************************

    # Return answer ...
    return model["workUnitCost"] * model["units"] * scaleFactor(model["energyScaling"], ledgerSize) * nTx
