#!/usr/bin/env python3

# Define function ...
def makeBlock(
    parentA,
    parentB,
    payload,
    createdAt,
    /,
    *,
    recordBytes = None,
):
    """Make a block

    This function wraps a list of transaction records into a block that
    approves two parent blocks. The block identifier is the SHA-256 digest of
    the parents, the creation time and the identifiers of the records.

    Parameters
    ----------
    parentA : str
        the identifier of the first approved block
    parentB : str
        the identifier of the second approved block
    payload : list of dict
        the records
    createdAt : int
        the creation time (in seconds)
    recordBytes : int, optional
        the serialized size of one record (in bytes); defaults to 128

    Returns
    -------
    block : dict
        the block
    """

    # Import standard modules ...
    import hashlib

    # Import my modules ...
    from .. import RECORD_BYTES

    # **************************************************************************

    # Populate default values ...
    if recordBytes is None:
        recordBytes = RECORD_BYTES

    # Hash the contents ...
    hashObj = hashlib.sha256()
    hashObj.update(f"{parentA}|{parentB}|{createdAt:d}".encode("utf-8"))
    for rec in payload:
        hashObj.update(f"|{rec['txId']}".encode("utf-8"))

    # Return answer ...
    return {
             "blockId" : hashObj.hexdigest(),
             "parentA" : parentA,
             "parentB" : parentB,
             "payload" : list(payload),
        "payloadBytes" : len(payload) * recordBytes,
           "createdAt" : int(createdAt),
    }
