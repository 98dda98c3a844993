#!/usr/bin/env python3

# Define function ...
def recomputeTips(
    ledger,
    /,
):
    """Recompute the tips of a ledger from scratch

    Parameters
    ----------
    ledger : dict
        the ledger

    Returns
    -------
    tips : set of str
        the identifiers of the blocks that no other block approves
    """

    # Find every approved block ...
    approved = set()
    for block in ledger["blocks"].values():
        if block["blockId"] == ledger["genesis"]:
            continue
        approved.add(block["parentA"])
        approved.add(block["parentB"])

    # Return answer ...
    return set(ledger["blocks"]) - approved
