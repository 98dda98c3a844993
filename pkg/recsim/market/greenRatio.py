#!/usr/bin/env python3

# Define function ...
def greenRatio(
    consumer,
    slot,
    /,
    *,
    cumulative = True,
):
    """Find the green ratio of a consumer and how far it lags its target

    The green ratio is the renewable energy of the consumer (the certificates
    that it owns, at 1 MWh each, plus its own renewable energy) divided by its
    consumption. It is found either for the year to date (up to and including
    the slot) or for the slot alone.

    Parameters
    ----------
    consumer : dict
        the consumer
    slot : int
        the slot
    cumulative : bool, optional
        use the year-to-date energy rather than the energy of the slot

    Returns
    -------
    ratio : float
        the green ratio
    lag : float
        the shortfall from the target (never negative)
    """

    # Find the energy ...
    if cumulative:
        consumption = float(consumer["cumConsumptionMwh"][slot])                # [MWh]
        renewable = float(consumer["cumOwnRenewableMwh"][slot])                 # [MWh]
    else:
        consumption = float(consumer["consumptionMwh"][slot])                   # [MWh]
        renewable = float(consumer["ownRenewableMwh"][slot])                    # [MWh]

    # Check input ...
    if consumption <= 0.0:
        raise ZeroDivisionError(f"\"{consumer['consumerId']}\" has consumed nothing by slot {slot:d}") from None

    # Find the ratio ...
    ratio = (consumer["recsOwned"] + renewable) / consumption

    # Return answer ...
    return ratio, max(0.0, consumer["greenTarget"] - ratio)
