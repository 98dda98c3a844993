#!/usr/bin/env python3

# Define function ...
def makeConflict(
    candidateA,
    candidateB,
    /,
    *,
    conflictId = None,
    submitterA = None,
    submitterB = None,
):
    """Make a pair of conflicting transactions

    Parameters
    ----------
    candidateA : str
        the identifier of the first transaction
    candidateB : str or None
        the identifier of the second transaction (None when a single
        transaction is validated without a rival)
    conflictId : str, optional
        the identifier of the conflict; defaults to "candidateA/candidateB"
    submitterA : str, optional
        the node that submitted the first transaction
    submitterB : str, optional
        the node that submitted the second transaction

    Returns
    -------
    conflict : dict
        the conflict
    """

    # Populate default values ...
    if conflictId is None:
        conflictId = f"{candidateA}/{candidateB}"

    # Return answer ...
    return {
        "conflictId" : conflictId,
        "candidateA" : candidateA,
        "candidateB" : candidateB,
        "submitterA" : submitterA,
        "submitterB" : submitterB,
        "resolution" : "open",
    }
