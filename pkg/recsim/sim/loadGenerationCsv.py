#!/usr/bin/env python3

# Define function ...
def loadGenerationCsv(
    fname,
    /,
    *,
    nSlots = None,
):
    """Load the renewable generation of each source

    The file has the header "period,source,energy_mwh", one row per month and
    source. The energy of a month is spread evenly over its hourly slots.

    Parameters
    ----------
    fname : str
        the name of the CSV file
    nSlots : int, optional
        the number of slots to return; defaults to one year

    Returns
    -------
    generation : dict
        the generation in each slot (in MWh), keyed by source, in the order of
        the known sources
    """

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # Import my modules ...
    from .. import SLOTS_PER_YEAR, SOURCES
    from .periodSlots import periodSlots
    from .readCsv import readCsv

    # **************************************************************************

    # Populate default values ...
    if nSlots is None:
        nSlots = SLOTS_PER_YEAR

    # Load the file ...
    df = readCsv(fname, ("period", "source", "energy_mwh"))

    # Loop over rows ...
    found = {}
    for i, row in enumerate(df.itertuples(index = False)):
        line = i + 2

        # Parse the row ...
        if row.source not in SOURCES:
            raise ValueError(f"line {line:d} of \"{fname}\": \"{row.source}\" is not a renewable source") from None
        try:
            first, count = periodSlots(row.period)
            energy = float(row.energy_mwh)                                      # [MWh]
        except ValueError as err:
            raise ValueError(f"line {line:d} of \"{fname}\": {err}") from None
        if not numpy.isfinite(energy):
            raise ValueError(f"line {line:d} of \"{fname}\": the energy is not finite") from None
        if energy < 0.0:
            raise ValueError(f"line {line:d} of \"{fname}\": the energy is negative") from None

        # Spread the energy over the month ...
        series = found.setdefault(row.source, numpy.zeros(nSlots, dtype = numpy.float64))
        series[first:min(first + count, nSlots)] += energy / count              # [MWh]

    # Return answer ...
    return {source : found[source] for source in SOURCES if source in found}
