#!/usr/bin/env python3

# Define function ...
def loadDemandCsv(
    fname,
    /,
    *,
    nSlots = None,
):
    """Load the demand of each consumer

    The file has the header
    "period,consumer_id,consumption_mwh,own_renewable_mwh" (the last column is
    optional and defaults to zero), one row per month and consumer. The energy
    of a month is spread evenly over its hourly slots.

    Parameters
    ----------
    fname : str
        the name of the CSV file
    nSlots : int, optional
        the number of slots to return; defaults to one year

    Returns
    -------
    demand : dict
        the consumption and own renewable energy in each slot (in MWh), keyed
        by consumer, in sorted order
    """

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # Import my modules ...
    from .. import SLOTS_PER_YEAR
    from .periodSlots import periodSlots
    from .readCsv import readCsv

    # **************************************************************************

    # Populate default values ...
    if nSlots is None:
        nSlots = SLOTS_PER_YEAR

    # Load the file ...
    df = readCsv(fname, ("period", "consumer_id", "consumption_mwh"), optional = ("own_renewable_mwh",))
    hasOwn = "own_renewable_mwh" in df.columns

    # Loop over rows ...
    found = {}
    for i, row in enumerate(df.itertuples(index = False)):
        line = i + 2

        # Parse the row ...
        if not isinstance(row.consumer_id, str) or not row.consumer_id:
            raise ValueError(f"line {line:d} of \"{fname}\": the consumer is blank") from None
        try:
            first, count = periodSlots(row.period)
            consumption = float(row.consumption_mwh)                            # [MWh]
            own = float(row.own_renewable_mwh) if hasOwn and row.own_renewable_mwh else 0.0 # [MWh]
        except ValueError as err:
            raise ValueError(f"line {line:d} of \"{fname}\": {err}") from None
        if not numpy.isfinite(consumption) or not numpy.isfinite(own):
            raise ValueError(f"line {line:d} of \"{fname}\": the energy is not finite") from None
        if consumption < 0.0 or own < 0.0:
            raise ValueError(f"line {line:d} of \"{fname}\": the energy is negative") from None

        # Spread the energy over the month ...
        if row.consumer_id not in found:
            found[row.consumer_id] = {
                 "consumptionMwh" : numpy.zeros(nSlots, dtype = numpy.float64),
                "ownRenewableMwh" : numpy.zeros(nSlots, dtype = numpy.float64),
            }
        stop = min(first + count, nSlots)
        found[row.consumer_id]["consumptionMwh"][first:stop] += consumption / count  # [MWh]
        found[row.consumer_id]["ownRenewableMwh"][first:stop] += own / count         # [MWh]

    # Return answer ...
    return {key : found[key] for key in sorted(found)}
