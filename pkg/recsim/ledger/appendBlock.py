#!/usr/bin/env python3

# Define function ...
def appendBlock(
    ledger,
    block,
    /,
    *,
    capacityBytes = None,
):
    """Append a verified block to a ledger

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
    ledger : dict
        the ledger (updated in place)
    """

    # Import my modules ...
    from .verifyBlock import verifyBlock

    # **************************************************************************

    # Refuse invalid blocks ...
    ok, reasons = verifyBlock(ledger, block, capacityBytes = capacityBytes)
    if not ok:
        raise ValueError(f"block \"{block['blockId']}\" is invalid: {'; '.join(reasons)}") from None

    # Insert block ...
    ledger["blocks"][block["blockId"]] = block
    ledger["order"].append(block["blockId"])
    ledger["approvers"][block["blockId"]] = set()
    for parent in (block["parentA"], block["parentB"]):
        ledger["approvers"][parent].add(block["blockId"])
        ledger["tips"].discard(parent)
    ledger["tips"].add(block["blockId"])
    ledger["sizeBlocks"] += 1
    ledger["txIds"].update(rec["txId"] for rec in block["payload"])

    # Return answer ...
    return ledger
