#!/usr/bin/env python3

# Define function ...
def tokenRequest(
    listingId,
    did,
    price,
    quantity,
    /,
):
    """Make the message that a buyer signs to commit its tokens to a listing

    Parameters
    ----------
    listingId : str
        the identifier of the listing
    did : str
        the DID of the buyer
    price : float
        the price bid per certificate
    quantity : int
        the number of certificates

    Returns
    -------
    request : bytes
        the message
    """

    # Return answer ...
    return f"{listingId}|{did}|{price:.6f}|{quantity:d}".encode("utf-8")
