#!/usr/bin/env python3

# Define function ...
def didFromPublicKey(
    publicKey,
    /,
):
    """Derive a DID from a public key

    Parameters
    ----------
    publicKey : bytes
        the raw 32-byte Ed25519 public key

    Returns
    -------
    did : str
        the DID
    """

    # Import standard modules ...
    import hashlib

    # **************************************************************************

    # Check input ...
    if not isinstance(publicKey, bytes) or len(publicKey) != 32:
        raise TypeError("the public key must be 32 raw bytes") from None

    # Return answer ...
    return "did:rec:" + hashlib.sha256(publicKey).hexdigest()
