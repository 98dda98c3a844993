#!/usr/bin/env python3

# Define function ...
def askPrice(
    supplier,
    cert,
    now,
    /,
):
    """Find the ask price of a certificate

    The ask price is the base price of the supplier scaled by the fraction of
    the lifetime of the certificate that remains. A certificate at the end of
    its lifetime is worth nothing and is retired.

    Parameters
    ----------
    supplier : dict
        the supplier
    cert : dict
        the certificate
    now : int
        the current slot

    Returns
    -------
    price : float
        the ask price
    """

    # Import sub-functions ...
    from .remainingLifetime import remainingLifetime

    # **************************************************************************

    # Check input ...
    if cert["retired"]:
        raise ValueError(f"\"{cert['certId']}\" is retired") from None

    # Find the remaining lifetime ...
    remain = remainingLifetime(cert, now)
    if remain <= 0:
        cert["retired"] = True
        return 0.0

    # Return answer ...
    return supplier["basePrice"] * remain / cert["lifetimeTotal"]
