#!/usr/bin/env python3

# Define function ...
def makeBid(
    channel,
    buyer,
    privateKey,
    listing,
    price,
    /,
    *,
    timestamp = 0,
):
    """Make the authenticated bid of a buyer on a listing

    The bid is made on the side of the buyer: it is tagged on the channel of
    the listing and its token request is signed with the private key of the
    buyer, which never reaches the contract.

    Parameters
    ----------
    channel : dict
        the channel of the listing
    buyer : dict
        the buyer ("did" and "tokens")
    privateKey : cryptography.hazmat.primitives.asymmetric.ed25519.Ed25519PrivateKey
        the private key of the buyer
    listing : dict
        the listing ("listingId" and "certs", or "quantity")
    price : float
        the price bid per certificate
    timestamp : int, optional
        the time of the bid (in seconds)

    Returns
    -------
    bid : dict
        the bid
    """

    # Import my modules ...
    from .makeTag import makeTag
    from .tokenRequest import tokenRequest

    # **************************************************************************

    # Find the quantity ...
    quantity = listing["quantity"] if "quantity" in listing else len(listing["certs"])

    # Return answer ...
    return {
            "buyer" : buyer,
            "price" : float(price),
        "timestamp" : int(timestamp),
              "tag" : makeTag(channel, buyer["did"], int(timestamp)),
        "signature" : privateKey.sign(tokenRequest(listing["listingId"], buyer["did"], float(price), quantity)),
    }
