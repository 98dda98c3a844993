#!/usr/bin/env python3

# Import standard modules ...
import math

# Import special modules ...
try:
    import numpy
except:
    raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None
try:
    import pytest
except:
    raise Exception("\"pytest\" is not installed; run \"pip install --user pytest\"") from None

# Import my modules ...
from recsim.fpc import (
    decayReputation,
    isolateNode,
    makeConflict,
    makeNode,
    makeNodes,
    makeParams,
    opinionQuery,
    recordActivity,
    runFpc,
    sampleQuorum,
    votingWeight,
)

# Define helper ...
def splitVote(seed, nFavourA, /, *, nNodes = 100, params = None):
    """Resolve one conflict on a fresh network where some nodes favour "a" """
    if params is None:
        params = makeParams()
    nodes = makeNodes(nNodes)
    for i, node in enumerate(nodes.values()):
        node["opinion"] = "favor_a" if i < nFavourA else "favor_b"
    conflict = makeConflict("a", "b")
    return runFpc(conflict, nodes, params, numpy.random.default_rng(seed))

# ******************************************************************************

def test_decay_examples():
    node = makeNode("v0")
    decayReputation(node, 0)
    assert node["rActivity"] == 1.0
    decayReputation(node, 5)
    assert node["rActivity"] == pytest.approx(0.36788, abs = 1.0e-5)

    node = makeNode("v1", reputation = 0.0)
    decayReputation(node, 50)
    assert node["rActivity"] == 0.0

def test_decay_composes():
    stepwise = makeNode("v0")
    for now in range(1, 11):
        decayReputation(stepwise, now)
    once = makeNode("v1")
    decayReputation(once, 10)
    assert stepwise["rActivity"] == pytest.approx(math.exp(-2.0))
    assert once["rActivity"] == pytest.approx(stepwise["rActivity"])

def test_decay_refuses_the_past():
    node = makeNode("v0", now = 5)
    with pytest.raises(ValueError):
        decayReputation(node, 4)

def test_activity_credit():
    node = makeNode("v0")
    recordActivity(node, True, 0)
    assert node["rActivity"] == 2.0

    recordActivity(node, False, 3)
    assert node["rActivity"] == 2.0
    assert node["lastActive"] == 0

def test_isolated_nodes_are_frozen():
    nodes = makeNodes(3)
    isolateNode(nodes, "v1")
    recordActivity(nodes["v1"], True, 2)
    decayReputation(nodes["v1"], 10)
    assert nodes["v1"]["rActivity"] == 1.0

def test_isolation_is_idempotent():
    nodes = makeNodes(3)
    isolateNode(nodes, "v2")
    isolateNode(nodes, "v2")
    assert [node["isolated"] for node in nodes.values()] == [False, False, True]
    with pytest.raises(KeyError):
        isolateNode(nodes, "v9")

def test_voting_weights():
    quorum = [makeNode("a", reputation = 2.0), makeNode("b", reputation = 3.0), makeNode("c", reputation = 5.0)]
    assert votingWeight(quorum[0], quorum) == pytest.approx(0.2)

    single = [makeNode("a", reputation = 7.0)]
    assert votingWeight(single[0], single) == 1.0

    equal = list(makeNodes(20).values())
    assert all(votingWeight(node, equal) == pytest.approx(0.05) for node in equal)

    empty = list(makeNodes(3, reputation = 0.0).values())
    with pytest.raises(RuntimeError):
        votingWeight(empty[0], empty)

def test_opinion_queries():
    conflict = makeConflict("a", "b")
    quorum = list(makeNodes(3).values())
    for node, opinion in zip(quorum, ("favor_a", "favor_b", "favor_a")):
        node["opinion"] = opinion
    assert opinionQuery(conflict, quorum, [0.5, 0.3, 0.2]) == pytest.approx(0.7)
    assert opinionQuery(conflict, quorum, [0.5, 0.3, 0.0005]) == pytest.approx(0.5)

    for node in quorum:
        node["opinion"] = "favor_a"
    assert opinionQuery(conflict, quorum, [1.0 / 3.0] * 3) == pytest.approx(1.0)

def test_isolated_nodes_are_never_sampled():
    nodes = makeNodes(30)
    isolateNode(nodes, "v07")
    rng = numpy.random.default_rng(11)
    for _ in range(100):
        quorum = sampleQuorum(nodes, 20, rng)
        assert len({member["nodeId"] for member in quorum}) == 20
        assert all(member["nodeId"] != "v07" for member in quorum)

def test_quorum_tops_up_with_idle_nodes():
    nodes = makeNodes(25, reputation = 0.0)
    for nodeId in ("v00", "v01", "v02"):
        nodes[nodeId]["rActivity"] = 1.0
    quorum = sampleQuorum(nodes, 20, numpy.random.default_rng(12))
    assert {"v00", "v01", "v02"} <= {member["nodeId"] for member in quorum}

def test_too_few_connected_nodes():
    nodes = makeNodes(40)
    for i in range(21):
        isolateNode(nodes, f"v{i:02d}")
    with pytest.raises(ValueError):
        runFpc(makeConflict("a", "b"), nodes, makeParams(), numpy.random.default_rng(13))

def test_unanimous_network_decides_in_one_round():
    nodes = makeNodes(50)
    for node in nodes.values():
        node["opinion"] = "favor_a"
    conflict = makeConflict("a", "b", submitterB = "v49")
    trace = []
    assert runFpc(conflict, nodes, makeParams(), numpy.random.default_rng(14), now = 3, trace = trace) == "a_wins"
    assert conflict["resolution"] == "a_wins"
    assert conflict["rounds"] == 1
    assert conflict["queries"] == 20
    assert len(trace) == 1
    assert nodes["v49"]["isolated"]
    assert len(conflict["participants"]) == 20
    for nodeId in conflict["participants"]:
        assert nodes[nodeId]["rActivity"] == (1.0 if nodeId == "v49" else 2.0)

def test_losing_submitter_is_isolated():
    nodes = makeNodes(50)
    for node in nodes.values():
        node["opinion"] = "favor_b"
    conflict = makeConflict("a", "b", submitterA = "v03")
    assert runFpc(conflict, nodes, makeParams(), numpy.random.default_rng(15)) == "b_wins"
    assert nodes["v03"]["isolated"]
    assert all(node["opinion"] == "favor_b" for node in nodes.values() if not node["isolated"])

def test_only_the_resolution_changes_opinions():
    nodes = makeNodes(60)
    for i, node in enumerate(nodes.values()):
        node["opinion"] = "favor_a" if i < 40 else "favor_b"
    isolateNode(nodes, "v00")
    isolateNode(nodes, "v59")
    conflict = makeConflict("a", "b")
    trace = []
    resolution = runFpc(conflict, nodes, makeParams(), numpy.random.default_rng(17), trace = trace)
    agreed = "favor_a" if resolution == "a_wins" else "favor_b"
    assert all(node["opinion"] == agreed for node in nodes.values() if not node["isolated"])
    assert nodes["v00"]["opinion"] == "favor_a"
    assert nodes["v59"]["opinion"] == "favor_b"
    assert [row["round"] for row in trace] == list(range(1, conflict["rounds"] + 1))
    assert all(row["decision"] in ("favor_a", "favor_b") for row in trace)

def test_initial_threshold_sets_the_first_bar():
    strict = makeParams(omegaInitial = 1.0, rounds = 1)
    lenient = makeParams(omegaInitial = 0.5, rounds = 1)
    winsStrict = sum(splitVote(seed, 60, params = strict) == "a_wins" for seed in range(200))
    winsLenient = sum(splitVote(seed, 60, params = lenient) == "a_wins" for seed in range(200))
    assert winsLenient > 10
    assert winsStrict < winsLenient / 10

def test_degenerate_quorums_fail():
    nodes = makeNodes(30, reputation = 0.0)
    conflict = makeConflict("a", "b")
    with pytest.raises(RuntimeError):
        runFpc(conflict, nodes, makeParams(), numpy.random.default_rng(16))
    assert conflict["resolution"] == "open"

def test_bad_params():
    with pytest.raises(ValueError):
        makeParams(beta = 0.5)
    with pytest.raises(ValueError):
        makeParams(firstRoundBounds = (0.4, 1.0))
    with pytest.raises(ValueError):
        makeParams(omegaInitial = 0.4)
    with pytest.raises(ValueError):
        makeParams(firstRoundBounds = (0.5, 0.7), omegaInitial = 0.8)

def test_honest_majority_wins_quickly():
    wins = sum(splitVote(seed, 80) == "a_wins" for seed in range(300))
    assert wins >= 294

@pytest.mark.slow
def test_honest_majority_wins_monte_carlo():
    wins = sum(splitVote(seed, 80) == "a_wins" for seed in range(10000))
    assert wins / 10000 >= 0.99

@pytest.mark.slow
def test_even_split_is_a_coin_toss():
    wins = sum(splitVote(seed, 50) == "a_wins" for seed in range(10000))
    assert abs(wins / 10000 - 0.5) <= 0.03
