#!/usr/bin/env python3

# Define function ...
def greenMultiplier(
    greenRatio,
    /,
):
    """Find how much a green ratio target slows down a transaction

    Higher targets make consumers trade more often, which loads every
    consensus kind. The multiplier is one at a 30% target and grows by 10% for
    every further 30%.

    Parameters
    ----------
    greenRatio : float
        the green ratio target

    Returns
    -------
    multiplier : float
        the multiplier
    """

    # Return answer ...
    return 1.0 + 0.1 * (greenRatio - 0.3) / 0.3
