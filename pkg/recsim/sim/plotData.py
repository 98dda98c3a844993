#!/usr/bin/env python3

# Define function ...
def plotData(
    variant,
    outDir,
    /,
    *,
          config = None,
     ledgerSizes = (100, 300, 1000, 3000, 10000),
          nNodes = 100,
    nValidations = 10000,
            seed = 0,
):
    """Write the plot-ready CSV file(s) of a figure

    The variants are:

    * "prices", the daily mean trade price of each source (needs a
      configuration);
    * "energy", the energy per transaction of each consensus kind against the
      size of the ledger;
    * "verifications", the number of validations that each node performs
      under each consensus kind; and
    * "privacy", the public account volumes with and without privacy routing
      (needs a configuration).

    Parameters
    ----------
    variant : str
        the variant
    outDir : str
        the directory to write the CSV file(s) to
    config : dict, optional
        the configuration of the scenario
    ledgerSizes : tuple of int, optional
        the ledger sizes of the "energy" variant (in blocks)
    nNodes : int, optional
        the number of nodes of the "verifications" variant
    nValidations : int, optional
        the number of validations of the "verifications" variant
    seed : int, optional
        the base seed of the "verifications" variant

    Returns
    -------
    fnames : list of str
        the CSV files that were written
    """

    # Import standard modules ...
    import os

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # Import my modules ...
    from .. import SOURCES
    from ..baselines import makeCostModel, txEnergy, verificationDistribution
    from .privacyDemo import privacyDemo
    from .runScenario import runScenario
    from .writeRows import writeRows

    # **************************************************************************

    # Check input ...
    if variant not in ("prices", "energy", "verifications", "privacy"):
        raise ValueError(f"\"{variant}\" is not a plot-data variant") from None
    if variant in ("prices", "privacy") and config is None:
        raise ValueError(f"the \"{variant}\" variant needs a scenario configuration") from None
    os.makedirs(outDir, exist_ok = True)

    # Handle the privacy variant ...
    if variant == "privacy":
        privacyDemo(config, outDir = outDir)
        return [os.path.join(outDir, f"privacy_{mode}.csv") for mode in ("pre", "post", "metrics")]

    # Initialize list ...
    rows = []

    # Handle the prices variant ...
    if variant == "prices":
        results = runScenario(config)
        nDays = (config["n_slots"] + 23) // 24
        totals = numpy.zeros((nDays, len(SOURCES)), dtype = numpy.float64)
        volumes = numpy.zeros((nDays, len(SOURCES)), dtype = numpy.int64)
        for trade in results["trades"]:
            j = SOURCES.index(trade["source"])
            totals[trade["slot"] // 24, j] += trade["price"] * trade["quantity"]
            volumes[trade["slot"] // 24, j] += trade["quantity"]
        for day in range(nDays):
            row = {"day" : day}
            for j, source in enumerate(SOURCES):
                row[source] = float(totals[day, j] / volumes[day, j]) if volumes[day, j] > 0 else None
            rows.append(row)

    # Handle the energy variant ...
    if variant == "energy":
        for kind in ("pow", "prism", "pos", "fpc_rep"):
            model = makeCostModel(kind)
            for ledgerSize in ledgerSizes:
                rows.append(
                    {
                        "consensus_kind" : kind,
                           "ledger_size" : int(ledgerSize),
                          "energy_units" : txEnergy(model, ledgerSize),
                    }
                )

    # Handle the verifications variant ...
    if variant == "verifications":
        for i, kind in enumerate(("pow", "prism", "pos", "fpc_rep")):
            counts = verificationDistribution(
                makeCostModel(kind),
                nNodes,
                nValidations,
                numpy.random.default_rng(seed + i),
            )
            for node, count in enumerate(counts):
                rows.append(
                    {
                        "consensus_kind" : kind,
                                  "node" : node,
                           "validations" : int(count),
                    }
                )

    # Write CSV ...
    fname = os.path.join(outDir, f"{variant}.csv")
    writeRows(rows, fname, list(rows[0]))

    # Return answer ...
    return [fname]
