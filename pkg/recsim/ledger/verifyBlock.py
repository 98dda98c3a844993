#!/usr/bin/env python3

# Define function ...
def verifyBlock(
    ledger,
    block,
    /,
    *,
    capacityBytes = None,
):
    """Verify a block against a ledger

    This function checks that both parents of a block exist (and are not
    younger than it), that its payload fits in a pool, that every record obeys
    the record rules and that no record identifier is repeated, either within
    the block or against the ledger. A repeated identifier is a double spend.

    Parameters
    ----------
    ledger : dict
        the ledger
    block : dict
        the block
    capacityBytes : int, optional
        the maximum payload size (in bytes); defaults to 1 MiB

    Returns
    -------
    ok : bool
        whether the block is valid
    reasons : list of str
        the violations (an empty list when the block is valid)
    """

    # Import my modules ...
    from .. import POOL_CAPACITY_BYTES
    from .checkRecord import checkRecord

    # **************************************************************************

    # Populate default values ...
    if capacityBytes is None:
        capacityBytes = POOL_CAPACITY_BYTES

    # Initialize list ...
    reasons = []

    # Check identifier ...
    if block["blockId"] in ledger["blocks"]:
        reasons.append("duplicate block")

    # Check parents ...
    for parent in (block["parentA"], block["parentB"]):
        if parent not in ledger["blocks"]:
            reasons.append("unresolved parent")
        elif ledger["blocks"][parent]["createdAt"] > block["createdAt"]:
            reasons.append("parent created after child")
    if block["parentA"] == block["parentB"]:
        # NOTE: Only the bootstrap blocks may approve genesis twice.
        if block["parentA"] != ledger["genesis"] or ledger["sizeBlocks"] > 2:
            reasons.append("duplicate parents")

    # Check size ...
    if block["payloadBytes"] > capacityBytes:
        reasons.append("payload exceeds capacity")

    # Loop over records ...
    seen = set()
    for rec in block["payload"]:
        # Check record ...
        for problem in checkRecord(rec):
            reasons.append(f"invalid record {rec.get('txId')}: {problem}")

        # Check uniqueness ...
        if rec["txId"] in ledger["txIds"] or rec["txId"] in seen:
            reasons.append("double spend")
        seen.add(rec["txId"])

    # Return answer ...
    return len(reasons) == 0, reasons
