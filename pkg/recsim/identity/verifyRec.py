#!/usr/bin/env python3

# Define function ...
def verifyRec(
    signed,
    publicKey,
    /,
    *,
    now = None,
):
    """Verify a signed REC

    Parameters
    ----------
    signed : dict
        the signed REC
    publicKey : bytes
        the raw 32-byte public key of the claimed signer
    now : int, optional
        the current time (in seconds); an expired REC fails

    Returns
    -------
    ok : bool
        whether the REC is valid
    verdict : str
        "valid", "forged" or "expired"
    """

    # Import special modules ...
    try:
        import cryptography
        import cryptography.exceptions
        import cryptography.hazmat.primitives.asymmetric.ed25519
    except:
        raise Exception("\"cryptography\" is not installed; run \"pip install --user cryptography\"") from None

    # **************************************************************************

    # Check the signature ...
    message = signed["payload"] + f"|{signed['tGen']:d}|{signed['tExp']:d}".encode("ascii")
    try:
        key = cryptography.hazmat.primitives.asymmetric.ed25519.Ed25519PublicKey.from_public_bytes(publicKey)
        key.verify(signed["signature"], message)
    except (cryptography.exceptions.InvalidSignature, ValueError):
        return False, "forged"

    # Check the expiry ...
    if now is not None and now > signed["tExp"]:
        return False, "expired"

    # Return answer ...
    return True, "valid"
