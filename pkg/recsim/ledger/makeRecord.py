#!/usr/bin/env python3

# Define function ...
def makeRecord(
    sellerDid,
    buyerAccount,
    timestamp,
    expirationDate,
    recSource,
    recPrice,
    recAmount,
    genTime,
    /,
    *,
    nonce = "",
     txId = None,
):
    """Make a transaction record

    This function bundles the information of one REC transfer into the record
    that is stored in the payload of a block. Unless one is given, the 32-byte
    transaction identifier is the SHA-256 digest of every field plus a nonce,
    rendered as hexadecimal, so identical inputs always produce identical
    identifiers.

    Parameters
    ----------
    sellerDid : str
        the DID of the seller
    buyerAccount : str
        the (possibly routed) account of the buyer
    timestamp : int
        the time of the transaction (in seconds)
    expirationDate : int
        the time that the certificates expire (in seconds)
    recSource : str
        the renewable source that backs the certificates
    recPrice : float
        the price per certificate
    recAmount : int
        the number of certificates
    genTime : int
        the time that the certificates were generated (in seconds)
    nonce : str, optional
        extra text mixed into the identifier so that otherwise identical
        records are distinct
    txId : str, optional
        the identifier to use instead of the derived one

    Returns
    -------
    rec : dict
        the record
    """

    # Import standard modules ...
    import hashlib

    # **************************************************************************

    # Derive the identifier (if needed) ...
    if txId is None:
        fields = [
            sellerDid,
            buyerAccount,
            f"{timestamp:d}",
            f"{expirationDate:d}",
            recSource,
            f"{recPrice:.6f}",
            f"{recAmount:d}",
            f"{genTime:d}",
            nonce,
        ]
        txId = hashlib.sha256("|".join(fields).encode("utf-8")).hexdigest()

    # Return answer ...
    return {
                  "txId" : txId,
             "sellerDid" : sellerDid,
          "buyerAccount" : buyerAccount,
             "timestamp" : timestamp,
        "expirationDate" : expirationDate,
             "recSource" : recSource,
              "recPrice" : recPrice,
             "recAmount" : recAmount,
               "genTime" : genTime,
    }
