#!/usr/bin/env python3

# Define function ...
def submitTransaction(
    pool,
    rec,
    /,
    *,
         ledger = None,
    recordBytes = None,
):
    """Submit a transaction record to the pool

    This function validates a record and appends it to the pool of records
    that are waiting to be packed into a block. Every record is counted as a
    fixed-size serialization, so a 1 MiB pool holds exactly 8,192 records.

    A record whose identifier is already pending (or, when a ledger is given,
    already on the ledger) is rejected without raising: the return value says
    whether the record was accepted.

    Parameters
    ----------
    pool : dict
        the pool
    rec : dict
        the record
    ledger : dict, optional
        the ledger to check for identifiers that have already been committed
    recordBytes : int, optional
        the serialized size of one record (in bytes); defaults to 128

    Returns
    -------
    accepted : bool
        whether the record was appended to the pool
    """

    # Import my modules ...
    from .. import RECORD_BYTES
    from .checkRecord import checkRecord

    # **************************************************************************

    # Populate default values ...
    if recordBytes is None:
        recordBytes = RECORD_BYTES

    # Check record ...
    problems = checkRecord(rec)
    if problems:
        raise ValueError(f"record \"{rec.get('txId')}\" is invalid: {'; '.join(problems)}") from None

    # Reject duplicates ...
    if rec["txId"] in pool["txIds"]:
        return False
    if ledger is not None and rec["txId"] in ledger["txIds"]:
        return False

    # Append record ...
    pool["pending"].append(rec)
    pool["txIds"].add(rec["txId"])
    pool["byteSize"] += recordBytes

    # Return answer ...
    return True
