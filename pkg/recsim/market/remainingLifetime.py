#!/usr/bin/env python3

# Define function ...
def remainingLifetime(
    cert,
    now,
    /,
):
    """Find the remaining lifetime of a certificate

    Parameters
    ----------
    cert : dict
        the certificate
    now : int
        the current slot

    Returns
    -------
    remain : int
        the number of slots until the certificate expires (never negative)
    """

    # Return answer ...
    return max(0, cert["genTime"] + cert["lifetimeTotal"] - int(now))
