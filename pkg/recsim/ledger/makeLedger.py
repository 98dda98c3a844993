#!/usr/bin/env python3

# Define function ...
def makeLedger(
    *,
    createdAt = None,
):
    """Make a ledger that only holds the genesis block

    Parameters
    ----------
    createdAt : int, optional
        the creation time of the genesis block (in seconds); defaults to the
        simulation epoch

    Returns
    -------
    ledger : dict
        the ledger
    """

    # Import my modules ...
    from .. import EPOCH
    from .makeBlock import makeBlock

    # **************************************************************************

    # Populate default values ...
    if createdAt is None:
        createdAt = EPOCH

    # Make the genesis block (it has no parents) ...
    genesis = makeBlock("", "", [], createdAt)

    # Return answer ...
    return {
           "genesis" : genesis["blockId"],
            "blocks" : {genesis["blockId"] : genesis},
             "order" : [genesis["blockId"]],
              "tips" : {genesis["blockId"]},
         "approvers" : {genesis["blockId"] : set()},
        "sizeBlocks" : 1,
             "txIds" : set(),
    }
