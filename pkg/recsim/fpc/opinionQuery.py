#!/usr/bin/env python3

# Define function ...
def opinionQuery(
    conflict,
    quorum,
    weights,
    /,
    *,
    floor = 0.001,
):
    """Query a quorum about a conflict

    This function returns the weighted share of the quorum that favours the
    first candidate. Members whose weight is below the floor are ignored.

    Parameters
    ----------
    conflict : dict
        the conflict
    quorum : list of dict
        the quorum
    weights : list of float
        the voting weights of the quorum (in the same order)
    floor : float, optional
        the weight below which a response is ignored

    Returns
    -------
    query : float
        the weighted share that favours the first candidate
    """

    # Initialize total ...
    query = 0.0

    # Loop over members ...
    for member, weight in zip(quorum, weights, strict = True):
        # Skip members with too little weight ...
        if weight < floor:
            continue

        # Add the response ...
        if member["opinion"] == "favor_a":
            query += weight

    # Return answer ...
    return query
