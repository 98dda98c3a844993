#!/usr/bin/env python3

# Define function ...
def registerDid(
    registry,
    doc,
    /,
):
    """Register a DID document

    Registering the same document twice does nothing.

    Parameters
    ----------
    registry : dict
        the registry
    doc : dict
        the DID document

    Returns
    -------
    new : bool
        whether the document was not registered before
    """

    # Import sub-functions ...
    from .didFromPublicKey import didFromPublicKey

    # **************************************************************************

    # Check input ...
    if didFromPublicKey(doc["publicKey"]) != doc["did"]:
        raise ValueError(f"\"{doc['did']}\" is not derived from its public key") from None

    # Check if it is already registered ...
    if doc["did"] in registry:
        if registry[doc["did"]]["publicKey"] != doc["publicKey"]:
            raise ValueError(f"\"{doc['did']}\" is registered with another public key") from None
        return False

    # Register it ...
    registry[doc["did"]] = {
              "did" : doc["did"],
        "publicKey" : doc["publicKey"],
    }

    # Return answer ...
    return True
