#!/usr/bin/env python3

# Define function ...
def exportLedger(
    ledger,
    /,
    *,
    fname = None,
):
    """Export a ledger as one line per block

    Each line is ``block_id,parent_a,parent_b,created_at,n_tx``, in the order
    that the blocks were appended. The genesis block has empty parents.

    Parameters
    ----------
    ledger : dict
        the ledger
    fname : str, optional
        the file to write the export to

    Returns
    -------
    text : str
        the export
    """

    # Create the lines ...
    lines = []
    for blockId in ledger["order"]:
        block = ledger["blocks"][blockId]
        lines.append(f"{blockId},{block['parentA']},{block['parentB']},{block['createdAt']:d},{len(block['payload']):d}\n")
    text = "".join(lines)

    # Save the export (if needed) ...
    if fname is not None:
        print(f"Making \"{fname}\" ...")
        with open(fname, "wt", encoding = "utf-8") as fObj:
            fObj.write(text)

    # Return answer ...
    return text
