#!/usr/bin/env python3

# Define function ...
def makeCostModel(
    kind,
    /,
    *,
          energyRatio = 0.35,
         fpcFloorTime = 0.0006,
        powEnergyCost = 1.0e-3,
    posEnergyRefSize = 3000.0,
          prismChains = 10,
        prismOverhead = 0.05,
           quorumSize = 20,
    stakeDistribution = None,
):
    """Make a calibrated cost model for a consensus kind

    This function fits the constants of an abstract cost model to the
    reference transaction times once (using the 30% target cells for ledgers
    of 100 and 10,000 blocks). The kinds scale with the size of the ledger as
    follows:

    * "pow" is superlinear, with the exponent that joins the two cells;
    * "prism" is "pow" spread over parallel chains plus a coordination
      overhead;
    * "pos" is linear, with the reference size that joins the two cells;
    * "fpc_rep" is logarithmic, counting the opinion queries that
      :func:`recsim.fpc.runFpc` actually makes to validate an uncontested
      transaction.

    Energy uses its own scaling: "pow" and "prism" share the superlinear
    exponent, "pos" is linear and "fpc_rep" is calibrated to use a fixed share
    of the energy of "pos" on a ledger of 10,000 blocks.

    Parameters
    ----------
    kind : str
        the consensus kind, one of "pow", "prism", "pos" or "fpc_rep"
    energyRatio : float, optional
        the energy of "fpc_rep" as a share of the energy of "pos" on a ledger
        of 10,000 blocks
    fpcFloorTime : float, optional
        the transaction time of "fpc_rep" on a ledger of 100 blocks (in
        seconds)
    powEnergyCost : float, optional
        the energy of one unit of "pow" work
    posEnergyRefSize : float, optional
        the ledger size at which the energy of "pos" has doubled (in blocks)
    prismChains : int, optional
        the number of parallel chains of "prism"
    prismOverhead : float, optional
        the coordination overhead of "prism" (as a fraction)
    quorumSize : int, optional
        the quorum size of "fpc_rep"
    stakeDistribution : numpy.ndarray, optional
        the stake of each validator ("pos" only); when not given, stakes are
        drawn when verifications are simulated

    Returns
    -------
    model : dict
        the cost model
    """

    # Import standard modules ...
    import math

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # Import my modules ...
    from ..fpc import makeConflict, makeNodes, makeParams, runFpc
    from .referenceTimes import referenceTimes

    # **************************************************************************

    # Create short-hands ...
    times = referenceTimes()
    small, large = 100, 10000                                                   # [blocks]
    decades = math.log10(large / small)

    # Check input ...
    if stakeDistribution is not None:
        stakeDistribution = numpy.asarray(stakeDistribution, dtype = numpy.float64)
        if (stakeDistribution < 0.0).any() or stakeDistribution.sum() <= 0.0:
            raise ValueError("the stake distribution must be non-negative with a positive total") from None

    # Fit the kind ...
    if kind in ("pow", "prism"):
        tSmall = times["pow"][small][0.3]                                       # [s]
        tLarge = times["pow"][large][0.3]                                       # [s]
        exponent = math.log10(tLarge / tSmall) / decades
        ledgerScaling = {"class" : "superlinear", "exponent" : exponent}
        energyScaling = {"class" : "superlinear", "exponent" : exponent}
        baseTime = tSmall / float(small) ** exponent                            # [s]
        workUnitCost = powEnergyCost
        units = 1
        if kind == "prism":
            baseTime *= (1.0 + prismOverhead) / prismChains
            workUnitCost *= (1.0 + prismOverhead) / prismChains
    elif kind == "pos":
        tSmall = times["pos"][small][0.3]                                       # [s]
        tLarge = times["pos"][large][0.3]                                       # [s]
        ratio = tLarge / tSmall

        # NOTE: Solve (1 + large / ref) = ratio * (1 + small / ref) for ref.
        refSize = (large - ratio * small) / (ratio - 1.0)                       # [blocks]
        ledgerScaling = {"class" : "linear", "reference" : refSize}
        energyScaling = {"class" : "linear", "reference" : posEnergyRefSize}
        baseTime = tSmall / (1.0 + small / refSize)                             # [s]
        workUnitCost = 1.0
        units = 1
    elif kind == "fpc_rep":
        # Count the queries of an uncontested validation ...
        nodes = makeNodes(quorumSize)
        for node in nodes.values():
            node["opinion"] = "favor_a"
        conflict = makeConflict("validation", None)
        runFpc(
            conflict,
            nodes,
            makeParams(quorumSize = quorumSize),
            numpy.random.default_rng(0),
        )
        units = conflict["queries"]

        # Fit the logarithmic growth through the large cell ...
        tLarge = times["fpc_rep"][large][0.3]                                   # [s]
        slope = (tLarge / fpcFloorTime - 1.0) / decades
        ledgerScaling = {"class" : "logarithmic", "slope" : slope, "reference" : float(small)}
        energyScaling = {"class" : "logarithmic", "slope" : slope, "reference" : float(small)}
        baseTime = fpcFloorTime / units                                         # [s]

        # Pin the energy to a share of the energy of "pos" ...
        posEnergy = 1.0 + large / posEnergyRefSize
        workUnitCost = energyRatio * posEnergy / (units * (1.0 + slope * decades))
    else:
        raise ValueError(f"\"{kind}\" is not a known consensus kind") from None

    # Return answer ...
    return {
                     "kind" : kind,
                 "baseTime" : baseTime,
             "workUnitCost" : workUnitCost,
                    "units" : units,
            "ledgerScaling" : ledgerScaling,
            "energyScaling" : energyScaling,
              "prismChains" : prismChains if kind == "prism" else None,
            "prismOverhead" : prismOverhead if kind == "prism" else None,
        "stakeDistribution" : stakeDistribution if kind == "pos" else None,
    }
