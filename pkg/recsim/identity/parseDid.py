#!/usr/bin/env python3

# Define function ...
def parseDid(
    text,
    /,
):
    """Parse a DID document from JSON

    Parameters
    ----------
    text : str
        the JSON text

    Returns
    -------
    doc : dict
        the DID document
    """

    # Import standard modules ...
    import json
    import re

    # Import sub-functions ...
    from .didFromPublicKey import didFromPublicKey

    # **************************************************************************

    # Load the JSON ...
    try:
        raw = json.loads(text)
        did = raw["did"]
        publicKey = bytes.fromhex(raw["publicKey"])
    except (KeyError, TypeError, ValueError):
        raise ValueError("the text is not a DID document") from None

    # Check the DID ...
    if not isinstance(did, str) or re.fullmatch(r"did:rec:[0-9a-f]{64}", did) is None:
        raise ValueError(f"\"{did}\" is not a DID") from None
    if didFromPublicKey(publicKey) != did:
        raise ValueError(f"\"{did}\" is not derived from its public key") from None

    # Return answer ...
    return {
              "did" : did,
        "publicKey" : publicKey,
    }
