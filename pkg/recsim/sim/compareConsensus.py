#!/usr/bin/env python3

# Define function ...
def compareConsensus(
    *,
     greenRatios = (0.3, 0.6, 0.9),
          jitter = 0.0,
     ledgerSizes = (100, 1000, 10000),
          nNodes = 100,
    nValidations = 3000,
          outDir = None,
            seed = 0,
):
    """Compare the transaction time and energy of every consensus kind

    Every (kind, ledger size, green ratio) cell simulates the time and energy
    of one transaction and how evenly a run of validations is spread over the
    nodes. Each cell is simulated with its own
    random number generator, seeded with the seed plus the index of the cell,
    so the cells are independent of each other and of their order.

    Parameters
    ----------
    greenRatios : tuple of float, optional
        the green ratio targets
    jitter : float, optional
        the sigma of the log-normal noise on each time (zero disables it)
    ledgerSizes : tuple of int, optional
        the ledger sizes (in blocks)
    nNodes : int, optional
        the number of nodes that share the validations of each cell
    nValidations : int, optional
        the number of validations of each cell
    outDir : str, optional
        the directory to write "compare.csv" to
    seed : int, optional
        the base seed

    Returns
    -------
    rows : list of dict
        one row per cell
    """

    # Import standard modules ...
    import os

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # Import my modules ...
    from ..baselines import makeCostModel, referenceTimes, txEnergy, txTime, verificationDistribution
    from .writeRows import writeRows

    # **************************************************************************

    # Initialize list ...
    rows = []
    reference = referenceTimes()

    # Loop over cells ...
    for kind in ("pow", "prism", "pos", "fpc_rep"):
        model = makeCostModel(kind)
        for ledgerSize in ledgerSizes:
            for greenRatio in greenRatios:
                rng = numpy.random.default_rng(seed + len(rows))
                seconds = txTime(model, ledgerSize, greenRatio, jitter = jitter, rng = rng)
                counts = verificationDistribution(model, nNodes, nValidations, rng)
                rows.append(
                    {
                                   "consensus" : kind,
                                 "ledger_size" : int(ledgerSize),
                                 "green_ratio" : float(greenRatio),
                                   "tx_time_s" : seconds,
                                "energy_units" : txEnergy(model, ledgerSize),
                        "stddev_verifications" : float(counts.std()),
                                 "reference_s" : reference[kind].get(ledgerSize, {}).get(greenRatio),
                    }
                )

    # Write the output (if needed) ...
    if outDir is not None:
        os.makedirs(outDir, exist_ok = True)
        writeRows(rows, os.path.join(outDir, "compare.csv"), list(rows[0]))

    # Return answer ...
    return rows
