#!/usr/bin/env python3

# Define function ...
def replaceTransaction(
    pool,
    txId,
    rec,
    /,
    *,
    ledger = None,
):
    """Replace a pending record with the one that beat it in a conflict

    The new record takes the place (and so the block) of the old one, which
    leaves the pool and never reaches the ledger.

    Parameters
    ----------
    pool : dict
        the pool
    txId : str
        the identifier of the pending record to replace
    rec : dict
        the record that replaces it
    ledger : dict, optional
        the ledger to check for identifiers that have already been committed

    Returns
    -------
    old : dict
        the record that was removed
    """

    # Import sub-functions ...
    from .checkRecord import checkRecord

    # **************************************************************************

    # Check input ...
    problems = checkRecord(rec)
    if problems:
        raise ValueError(f"record \"{rec.get('txId')}\" is invalid: {'; '.join(problems)}") from None
    if rec["txId"] in pool["txIds"] or (ledger is not None and rec["txId"] in ledger["txIds"]):
        raise ValueError(f"record \"{rec['txId']}\" is a duplicate") from None
    if txId not in pool["txIds"]:
        raise KeyError(f"\"{txId}\" is not pending") from None

    # Swap the records ...
    i = next(i for i, pending in enumerate(pool["pending"]) if pending["txId"] == txId)
    old = pool["pending"][i]
    pool["pending"][i] = rec
    pool["txIds"].discard(txId)
    pool["txIds"].add(rec["txId"])

    # Return answer ...
    return old
