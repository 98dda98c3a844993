#!/usr/bin/env python3

# Define function ...
def packBlock(
    pool,
    ledger,
    rng,
    /,
    *,
      createdAt = None,
          debug = __debug__,
          flush = False,
    recordBytes = None,
):
    """Pack the pool into a new block on the ledger

    This function drains up to one block's worth of records from the front of
    the pool, wraps them into a block that approves two parents chosen by
    :func:`selectTips` and appends the block to the ledger. A pool is only
    packed once it is full, unless an end-of-slot flush is requested.

    Parameters
    ----------
    pool : dict
        the pool
    ledger : dict
        the ledger
    rng : numpy.random.Generator
        the random number generator
    createdAt : int, optional
        the creation time of the block (in seconds); defaults to the creation
        time of the youngest block on the ledger
    debug : bool, optional
        check that the maintained tips equal the recomputed tips
    flush : bool, optional
        pack a pool that is not full yet
    recordBytes : int, optional
        the serialized size of one record (in bytes); defaults to 128

    Returns
    -------
    block : dict or None
        the new block (None if there was nothing to pack)
    """

    # Import my modules ...
    from .. import RECORD_BYTES
    from .appendBlock import appendBlock
    from .makeBlock import makeBlock
    from .peekBlock import peekBlock
    from .recomputeTips import recomputeTips
    from .selectTips import selectTips

    # **************************************************************************

    # Populate default values ...
    if recordBytes is None:
        recordBytes = RECORD_BYTES
    if createdAt is None:
        createdAt = ledger["blocks"][ledger["order"][-1]]["createdAt"]

    # Take the records (if there is anything to do) ...
    payload = peekBlock(pool, flush = flush, recordBytes = recordBytes)
    if payload is None:
        return None
    nRec = len(payload)

    # Make the block and append it ...
    parentA, parentB = selectTips(ledger, rng)
    block = makeBlock(
        parentA,
        parentB,
        payload,
        createdAt,
        recordBytes = recordBytes,
    )
    appendBlock(ledger, block, capacityBytes = pool["capacityBytes"])

    # Drain the pool ...
    del pool["pending"][:nRec]
    pool["byteSize"] -= len(payload) * recordBytes
    pool["txIds"].difference_update(rec["txId"] for rec in payload)

    # Check tips ...
    if debug:
        assert recomputeTips(ledger) == ledger["tips"], "the maintained tips have drifted"

    # Return answer ...
    return block
