#!/usr/bin/env python3

# Define function ...
def signRec(
    payload,
    privateKey,
    tGen,
    tExp,
    /,
):
    """Sign the information of a REC

    The signature covers the payload and both times, so none of them can be
    changed without breaking it.

    Parameters
    ----------
    payload : bytes
        the REC information
    privateKey : cryptography.hazmat.primitives.asymmetric.ed25519.Ed25519PrivateKey
        the private key of the signer
    tGen : int
        the time that the REC was generated (in seconds)
    tExp : int
        the time that the REC expires (in seconds)

    Returns
    -------
    signed : dict
        the signed REC
    """

    # Check input ...
    if not isinstance(payload, bytes):
        raise TypeError("the payload must be bytes") from None
    if tExp <= tGen:
        raise ValueError(f"the expiry time ({tExp:d}) must be after the generation time ({tGen:d})") from None

    # Return answer ...
    return {
          "payload" : payload,
        "signature" : privateKey.sign(payload + f"|{tGen:d}|{tExp:d}".encode("ascii")),
             "tGen" : int(tGen),
             "tExp" : int(tExp),
    }
