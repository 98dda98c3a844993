#!/usr/bin/env python3

# Define function ...
def runFpc(
    conflict,
    nodes,
    params,
    rng,
    /,
    *,
       floor = 0.001,
         now = 0,
    redraws = 5,
       trace = None,
):
    """Resolve a conflict with reputation-weighted Fast Probabilistic Consensus

    Each round draws a quorum (weighted by reputation), queries it about the
    conflict and draws a random threshold: the first round's threshold comes
    from (omegaInitial, b), where b is the upper first round bound, and every
    later round's threshold comes from (beta_k, 1 - beta_k), where beta_k is
    itself drawn from (beta, 0.5). The round's tentative opinion is the first
    candidate if, and only if, the query reaches the threshold; it is kept in
    the trace and the nodes only change their opinion once the conflict is
    resolved.

    Queried members answer with their own opinion, which stays fixed while the
    vote runs. A unanimous query ends the vote straight away; otherwise the first
    candidate wins if the mean query over all of the rounds reaches the final
    round's threshold. Afterwards, every connected node adopts the result,
    every queried node gains one unit of reputation and the node that
    submitted the losing transaction (if known) is isolated.

    Parameters
    ----------
    conflict : dict
        the conflict (updated in place with the resolution and statistics)
    nodes : dict
        the nodes, keyed by identifier
    params : dict
        the consensus parameters
    rng : numpy.random.Generator
        the random number generator
    floor : float, optional
        the voting weight below which a response is ignored
    now : int, optional
        the current slot
    redraws : int, optional
        the number of times that a quorum without any reputation is drawn
        again before giving up
    trace : list, optional
        a list to append one row per round to

    Returns
    -------
    resolution : str
        either "a_wins" or "b_wins"
    """

    # Import sub-functions ...
    from .isolateNode import isolateNode
    from .opinionQuery import opinionQuery
    from .recordActivity import recordActivity
    from .sampleQuorum import sampleQuorum
    from .votingWeight import votingWeight

    # **************************************************************************

    # Find the connected nodes ...
    active = [node for node in nodes.values() if not node["isolated"]]
    if len(active) < params["quorumSize"]:
        raise ValueError(f"consensus needs {params['quorumSize']:,d} connected nodes but there are only {len(active):,d}") from None

    # Initialize lists ...
    queries = []
    participants = {}

    # Loop over rounds ...
    for iRound in range(params["rounds"]):
        # Draw the threshold ...
        if iRound == 0:
            omega = rng.uniform(params["omegaInitial"], params["firstRoundBounds"][1])
        else:
            beta = rng.uniform(params["beta"], 0.5)
            omega = rng.uniform(beta, 1.0 - beta)

        # Draw a quorum that holds some reputation ...
        for _ in range(redraws):
            quorum = sampleQuorum(nodes, params["quorumSize"], rng)
            total = sum(member["rActivity"] for member in quorum)
            try:
                weights = [votingWeight(member, quorum, total = total) for member in quorum]
            except RuntimeError:
                continue
            break
        else:
            raise RuntimeError(f"consensus on \"{conflict['conflictId']}\" failed: {redraws:d} quorums in a row had no reputation") from None
        for member in quorum:
            participants[member["nodeId"]] = member

        # Query the quorum ...
        query = opinionQuery(conflict, quorum, weights, floor = floor)
        queries.append(query)

        # Find the tentative opinion ...
        tentative = "favor_a" if query >= omega else "favor_b"

        # Save the round (if needed) ...
        if trace is not None:
            trace.append(
                {
                    "conflictId" : conflict["conflictId"],
                         "round" : iRound + 1,
                         "omega" : omega,
                     "meanQuery" : sum(queries) / len(queries),
                      "decision" : tentative,
                }
            )

        # Stop early if the quorum was unanimous ...
        # NOTE: Sums of weights are not exact, hence the tolerance.
        if query >= 1.0 - 1.0e-9 or query <= 1.0e-9:
            break

    # Resolve the conflict ...
    if query >= 1.0 - 1.0e-9:
        resolution = "a_wins"
    elif query <= 1.0e-9:
        resolution = "b_wins"
    elif sum(queries) / len(queries) >= omega:
        resolution = "a_wins"
    else:
        resolution = "b_wins"

    # Make every connected node agree ...
    for node in active:
        node["opinion"] = "favor_a" if resolution == "a_wins" else "favor_b"

    # Isolate the node that submitted the losing transaction ...
    loser = conflict["submitterB"] if resolution == "a_wins" else conflict["submitterA"]
    if loser is not None:
        isolateNode(nodes, loser)

    # Credit the participants ...
    for member in participants.values():
        recordActivity(member, 1, now)

    # Update the conflict ...
    conflict["resolution"] = resolution
    conflict["rounds"] = len(queries)
    conflict["queries"] = len(queries) * params["quorumSize"]
    conflict["meanQuery"] = sum(queries) / len(queries)
    conflict["participants"] = sorted(participants)

    # Return answer ...
    return resolution
