#!/usr/bin/env python3

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
from recsim.privacy import (
    anonymityMetrics,
    classify,
    exportPublicView,
    makeAccountGraph,
    makeActivityStats,
    newAccount,
    publicView,
    recordVolume,
    registerPrincipal,
    routeTransaction,
    tombstoneAccount,
)

# Define constants ...
PRINCIPALS = ("buyer-north", "buyer-south", "buyer-west")

# Define helper ...
def registeredGraph(seed, /):
    """Make an account graph with a few registered principals"""
    graph = makeAccountGraph(numpy.random.default_rng(seed))
    for principal in PRINCIPALS:
        registerPrincipal(graph, principal)
    return graph

# ******************************************************************************

def test_registration_is_idempotent():
    graph = registeredGraph(0)
    original = graph["principals"]["buyer-north"]
    assert registerPrincipal(graph, "buyer-north") == original
    assert len(graph["accounts"]) == 3
    assert graph["accounts"][original]["kind"] == "original"
    assert original.startswith("acct-")
    assert len(original) == 21

def test_unknown_kinds_and_principals():
    graph = registeredGraph(1)
    with pytest.raises(ValueError):
        newAccount(graph, "shadow", "buyer-north")
    with pytest.raises(KeyError):
        makeActivityStats(graph, {"buyer-east" : 3}, 0)

def test_activity_counts_recent_trades():
    graph = registeredGraph(2)
    for slot in (1, 5, 30, 31):
        recordVolume(graph, "buyer-north", [(graph["principals"]["buyer-north"], 1)], slot)
    stats = makeActivityStats(graph, {"buyer-north" : 4, "buyer-south" : 2, "buyer-west" : 0}, 32)
    assert stats["activity"] == {"buyer-north" : 2, "buyer-south" : 0}
    assert stats["uAmount"] == pytest.approx(3.0)
    assert stats["uActivity"] == pytest.approx(1.0)
    assert "buyer-west" not in stats["amount"]

def test_classification():
    graph = registeredGraph(3)
    stats = {"uAmount" : 4.0, "uActivity" : 2.0}
    assert classify(graph, "buyer-north", 3, 9, stats) == "original"
    assert classify(graph, "buyer-north", 4, 9, stats) == "original"
    assert classify(graph, "buyer-north", 6, 1, stats) == "empty"
    assert classify(graph, "buyer-north", 6, 3, stats) == "proxy"
    with pytest.raises(KeyError):
        classify(graph, "buyer-east", 6, 3, stats)

def test_proxy_split():
    graph = registeredGraph(4)
    legs = routeTransaction(graph, "proxy", "buyer-north", 10, {"uAmount" : 4.0})
    assert [quantity for _, quantity in legs] == [4, 4, 2]
    assert all(graph["accounts"][account]["kind"] == "proxy" for account, _ in legs)

    again = routeTransaction(graph, "proxy", "buyer-north", 3, {"uAmount" : 4.0})
    assert again == [(legs[0][0], 3)]

def test_proxy_fan_out_is_capped():
    graph = registeredGraph(5)
    legs = routeTransaction(graph, "proxy", "buyer-north", 100, {"uAmount" : 1.0}, maxProxies = 5)
    assert [quantity for _, quantity in legs] == [20] * 5

def test_proxy_legs_are_never_split_finer_than_their_size():
    graph = registeredGraph(9)
    legs = routeTransaction(graph, "proxy", "buyer-west", 6, {"uAmount" : 1.5})
    assert [quantity for _, quantity in legs] == [2, 2, 2]
    assert len({account for account, _ in legs}) == 3

def test_simple_routes():
    graph = registeredGraph(6)
    legs = routeTransaction(graph, "empty", "buyer-south", 6, {"uAmount" : 1.0})
    assert len(legs) == 1
    assert legs[0][1] == 6
    assert graph["accounts"][legs[0][0]]["kind"] == "empty"

    assert routeTransaction(graph, "original", "buyer-south", 1, {"uAmount" : 0.5}) == [(graph["principals"]["buyer-south"], 1)]
    with pytest.raises(ValueError):
        routeTransaction(graph, "mixer", "buyer-south", 1, {"uAmount" : 0.5})

def test_empty_accounts_are_single_use():
    graph = registeredGraph(7)
    (account, _), = routeTransaction(graph, "empty", "buyer-west", 2, {"uAmount" : 1.0})
    tombstoneAccount(graph, account)
    assert graph["accounts"][account]["owner"] is None
    assert graph["accounts"][account]["tombstoned"]
    with pytest.raises(ValueError):
        tombstoneAccount(graph, graph["principals"]["buyer-west"])
    with pytest.raises(KeyError):
        tombstoneAccount(graph, "acct-missing")

def test_public_view_has_no_owners(tmp_path):
    graph = registeredGraph(8)
    legs = routeTransaction(graph, "proxy", "buyer-north", 9, {"uAmount" : 3.0})
    recordVolume(graph, "buyer-north", legs, 0)
    recordVolume(graph, "buyer-south", [(graph["principals"]["buyer-south"], 2)], 0)
    view = publicView(graph)
    assert len(view) == 4
    assert all(set(account) == {"accountId", "kind", "totalVolume"} for account in view)
    assert sum(account["totalVolume"] for account in view) == 11

    fname = tmp_path / "public_view.csv"
    exportPublicView(view, str(fname))
    text = fname.read_text(encoding = "utf-8")
    assert text.startswith("account_id,kind,total_volume\n")
    assert all(principal not in text for principal in PRINCIPALS)

def test_metrics():
    view = [{"accountId" : f"acct-{i:d}", "kind" : "original", "totalVolume" : 5} for i in range(4)]
    metrics = anonymityMetrics(view)
    assert metrics["stddev"] == 0.0
    assert metrics["topShare"] == pytest.approx(0.25)
    assert metrics["accountCount"] == 4
    with pytest.raises(ValueError):
        anonymityMetrics([])

def test_routing_flattens_a_dominant_buyer():
    amounts = {"buyer-north" : 10, "buyer-south" : 1, "buyer-west" : 1}

    # Trade without routing ...
    plain = registeredGraph(9)
    for principal, quantity in amounts.items():
        recordVolume(plain, principal, [(plain["principals"][principal], quantity)], 10)
    before = anonymityMetrics(publicView(plain))

    # Trade with routing, after the dominant buyer has been busy ...
    routed = registeredGraph(9)
    for slot in range(5, 9):
        recordVolume(routed, "buyer-north", [(routed["principals"]["buyer-north"], 0)], slot)
    stats = makeActivityStats(routed, amounts, 10)
    for principal, quantity in amounts.items():
        decision = classify(routed, principal, quantity, stats["activity"][principal], stats)
        legs = routeTransaction(routed, decision, principal, quantity, stats)
        assert sum(legQuantity for _, legQuantity in legs) == quantity
        recordVolume(routed, principal, legs, 10)
    after = anonymityMetrics(publicView(routed))

    assert after["accountCount"] == 5
    assert before["accountCount"] == 3
    assert after["stddev"] < before["stddev"]
    assert after["topShare"] < before["topShare"]
