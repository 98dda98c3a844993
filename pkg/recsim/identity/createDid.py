#!/usr/bin/env python3

# Define function ...
def createDid(
    entropy,
    /,
):
    """Create a DID document and its private key

    The 32 bytes of entropy are used as the Ed25519 private key, so the same
    entropy always gives the same DID. The private key stays with the owner;
    only the document is ever registered.

    Parameters
    ----------
    entropy : bytes
        32 bytes of entropy (for example "os.urandom(32)" or
        "numpy.random.Generator.bytes(32)")

    Returns
    -------
    doc : dict
        the DID document
    privateKey : cryptography.hazmat.primitives.asymmetric.ed25519.Ed25519PrivateKey
        the private key
    """

    # Import special modules ...
    try:
        import cryptography
        import cryptography.hazmat.primitives.asymmetric.ed25519
        import cryptography.hazmat.primitives.serialization
    except:
        raise Exception("\"cryptography\" is not installed; run \"pip install --user cryptography\"") from None

    # Import sub-functions ...
    from .didFromPublicKey import didFromPublicKey

    # **************************************************************************

    # Check input ...
    if not isinstance(entropy, bytes) or len(entropy) != 32:
        raise TypeError("the entropy must be 32 bytes") from None

    # Make the keypair ...
    privateKey = cryptography.hazmat.primitives.asymmetric.ed25519.Ed25519PrivateKey.from_private_bytes(entropy)
    publicKey = privateKey.public_key().public_bytes(
        encoding = cryptography.hazmat.primitives.serialization.Encoding.Raw,
          format = cryptography.hazmat.primitives.serialization.PublicFormat.Raw,
    )

    # Return answer ...
    return {
              "did" : didFromPublicKey(publicKey),
        "publicKey" : publicKey,
    }, privateKey
