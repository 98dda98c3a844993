#!/usr/bin/env python3

# Define function ...
def selectTips(
    ledger,
    rng,
    /,
):
    """Select the two blocks that a new block approves

    This function picks two distinct tips uniformly at random. If the ledger
    has a single tip then the second parent is picked uniformly from the
    blocks that are not tips. A ledger that only holds the genesis block is
    approved twice by its first block.

    Parameters
    ----------
    ledger : dict
        the ledger
    rng : numpy.random.Generator
        the random number generator

    Returns
    -------
    parentA : str
        the identifier of the first parent
    parentB : str
        the identifier of the second parent
    """

    # NOTE: Sets have no stable order, so the tips are sorted before they are
    #       handed to the random number generator.
    tips = sorted(ledger["tips"])

    # Check if there are at least two tips ...
    if len(tips) >= 2:
        i, j = rng.choice(len(tips), size = 2, replace = False)
        return tips[int(i)], tips[int(j)]

    # Check if the ledger only holds the genesis block ...
    if ledger["sizeBlocks"] == 1:
        return ledger["genesis"], ledger["genesis"]

    # Draw blocks uniformly until one is not a tip ...
    # NOTE: The single tip is never more than one block out of the whole
    #       ledger, so rejection sampling terminates quickly.
    while True:
        blockId = ledger["order"][int(rng.integers(len(ledger["order"])))]
        if blockId not in ledger["tips"]:
            return tips[0], blockId
