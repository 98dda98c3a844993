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
from recsim import EPOCH, POOL_CAPACITY_BYTES, RECORD_BYTES
from recsim.ledger import (
    appendBlock,
    checkRecord,
    exportLedger,
    makeBlock,
    makeLedger,
    makePool,
    makeRecord,
    packBlock,
    peekBlock,
    recomputeTips,
    replaceTransaction,
    selectTips,
    slotTime,
    submitTransaction,
    topologicalOrder,
    verifyBlock,
)

# Define helper ...
def fakeRecord(n, /, *, amount = 1):
    """Make a well-formed record that differs from others by its nonce"""
    return makeRecord(
        "did:rec:" + "ab" * 32,
        "acct-0123456789abcdef",
        EPOCH + 3600,
        EPOCH + 3600 + 8760 * 3600,
        "wind",
        42.5,
        amount,
        EPOCH,
        nonce = f"{n:d}",
    )

# Define helper ...
def growLedger(seed, nRecords, /, *, capacityRecords = 4):
    """Pack a run of records into a small-block ledger"""
    rng = numpy.random.default_rng(seed)
    ledger = makeLedger()
    pool = makePool(capacityBytes = capacityRecords * RECORD_BYTES)
    for n in range(nRecords):
        submitTransaction(pool, fakeRecord(n), ledger = ledger)
        packBlock(pool, ledger, rng, createdAt = EPOCH + n)
    packBlock(pool, ledger, rng, flush = True)
    return ledger

# Define helper ...
def forkedLedger(nTips, /):
    """Make a ledger whose tips all approve the first block and genesis"""
    ledger = makeLedger()
    genesis = ledger["genesis"]
    first = makeBlock(genesis, genesis, [], EPOCH + 1)
    appendBlock(ledger, first)
    for n in range(nTips):
        appendBlock(ledger, makeBlock(first["blockId"], genesis, [], EPOCH + 2 + n))
    return ledger

# ******************************************************************************

def test_record_ids_are_hex_digests():
    rec = fakeRecord(0)
    assert len(rec["txId"]) == 64
    assert checkRecord(rec) == []
    assert fakeRecord(0)["txId"] == rec["txId"]
    assert fakeRecord(1)["txId"] != rec["txId"]

def test_record_problems():
    rec = fakeRecord(0)
    rec["recSource"] = "coal"
    rec["expirationDate"] = rec["timestamp"]
    problems = checkRecord(rec)
    assert len(problems) == 2
    assert any("coal" in problem for problem in problems)

def test_slot_time():
    assert slotTime(0) == EPOCH
    assert slotTime(24) == EPOCH + 86400

def test_submit_one_record():
    pool = makePool()
    assert submitTransaction(pool, fakeRecord(0))
    assert len(pool["pending"]) == 1
    assert pool["byteSize"] == 128

def test_submit_rejects_zero_amount():
    with pytest.raises(ValueError, match = "rec_amount"):
        submitTransaction(makePool(), fakeRecord(0, amount = 0))

def test_submit_signals_duplicates():
    pool = makePool()
    rec = fakeRecord(0)
    assert submitTransaction(pool, rec)
    assert not submitTransaction(pool, rec)
    assert pool["byteSize"] == RECORD_BYTES

def test_full_pool_packs_one_block():
    rng = numpy.random.default_rng(1)
    ledger = makeLedger()
    pool = makePool()
    for n in range(8191):
        submitTransaction(pool, fakeRecord(n))
    assert packBlock(pool, ledger, rng) is None
    submitTransaction(pool, fakeRecord(8191))
    assert pool["byteSize"] == POOL_CAPACITY_BYTES
    block = packBlock(pool, ledger, rng)
    assert block is not None
    assert len(block["payload"]) == 8192
    assert block["payloadBytes"] == POOL_CAPACITY_BYTES
    assert pool["pending"] == []
    assert pool["byteSize"] == 0
    assert ledger["sizeBlocks"] == 2

def test_flush_and_empty_pack():
    rng = numpy.random.default_rng(2)
    ledger = makeLedger()
    pool = makePool()
    for n in range(3):
        submitTransaction(pool, fakeRecord(n))
    block = packBlock(pool, ledger, rng, flush = True)
    assert len(block["payload"]) == 3
    assert packBlock(pool, ledger, rng, flush = True) is None

def test_peek_matches_the_next_block():
    pool = makePool(capacityBytes = 4 * RECORD_BYTES)
    for n in range(6):
        submitTransaction(pool, fakeRecord(n))
    payload = peekBlock(pool)
    assert [rec["txId"] for rec in payload] == [fakeRecord(n)["txId"] for n in range(4)]
    assert len(pool["pending"]) == 6
    ledger = makeLedger()
    block = packBlock(pool, ledger, numpy.random.default_rng(3))
    assert block["payload"] == payload
    assert peekBlock(pool) is None
    assert len(peekBlock(pool, flush = True)) == 2
    assert peekBlock(makePool(), flush = True) is None

def test_replaced_records_never_reach_the_ledger():
    ledger = makeLedger()
    pool = makePool(capacityBytes = 2 * RECORD_BYTES)
    honest = fakeRecord(0)
    submitTransaction(pool, honest)
    submitTransaction(pool, fakeRecord(1))
    forged = fakeRecord(2)
    assert replaceTransaction(pool, honest["txId"], forged, ledger = ledger) is honest
    assert pool["pending"][0] is forged
    assert pool["byteSize"] == 2 * RECORD_BYTES
    block = packBlock(pool, ledger, numpy.random.default_rng(4))
    assert block["payload"][0]["txId"] == forged["txId"]
    assert forged["txId"] in ledger["txIds"]
    assert honest["txId"] not in ledger["txIds"]
    assert submitTransaction(pool, honest, ledger = ledger)

def test_replacement_errors():
    pool = makePool()
    submitTransaction(pool, fakeRecord(0))
    submitTransaction(pool, fakeRecord(1))
    with pytest.raises(KeyError):
        replaceTransaction(pool, fakeRecord(5)["txId"], fakeRecord(6))
    with pytest.raises(ValueError, match = "duplicate"):
        replaceTransaction(pool, fakeRecord(0)["txId"], fakeRecord(1))
    with pytest.raises(ValueError, match = "invalid"):
        replaceTransaction(pool, fakeRecord(0)["txId"], fakeRecord(7, amount = 0))
    assert [rec["txId"] for rec in pool["pending"]] == [fakeRecord(0)["txId"], fakeRecord(1)["txId"]]

def test_genesis_is_approved_twice():
    ledger = makeLedger()
    rng = numpy.random.default_rng(3)
    assert selectTips(ledger, rng) == (ledger["genesis"], ledger["genesis"])

def test_two_tips_are_both_approved():
    ledger = forkedLedger(2)
    pair = selectTips(ledger, numpy.random.default_rng(4))
    assert set(pair) == ledger["tips"]

def test_tip_selection_is_seeded():
    ledger = forkedLedger(5)
    assert len(ledger["tips"]) == 5
    pairA = selectTips(ledger, numpy.random.default_rng(5))
    pairB = selectTips(ledger, numpy.random.default_rng(5))
    assert pairA == pairB
    assert pairA[0] != pairA[1]
    assert set(pairA) <= ledger["tips"]

def test_verify_well_formed_block():
    ledger = makeLedger()
    block = makeBlock(ledger["genesis"], ledger["genesis"], [fakeRecord(0)], EPOCH + 1)
    assert verifyBlock(ledger, block) == (True, [])

def test_verify_unresolved_parent():
    ledger = makeLedger()
    block = makeBlock("f" * 64, ledger["genesis"], [fakeRecord(0)], EPOCH + 1)
    ok, reasons = verifyBlock(ledger, block)
    assert not ok
    assert "unresolved parent" in reasons

def test_verify_double_spend():
    ledger = makeLedger()
    genesis = ledger["genesis"]
    first = makeBlock(genesis, genesis, [fakeRecord(0)], EPOCH + 1)
    appendBlock(ledger, first)
    second = makeBlock(first["blockId"], genesis, [fakeRecord(0)], EPOCH + 2)
    ok, reasons = verifyBlock(ledger, second)
    assert not ok
    assert "double spend" in reasons
    with pytest.raises(ValueError, match = "double spend"):
        appendBlock(ledger, second)

def test_verify_parent_from_the_future():
    ledger = makeLedger()
    genesis = ledger["genesis"]
    first = makeBlock(genesis, genesis, [], EPOCH + 10)
    appendBlock(ledger, first)
    second = makeBlock(first["blockId"], genesis, [], EPOCH + 5)
    assert "parent created after child" in verifyBlock(ledger, second)[1]

def test_ledger_duplicates_are_refused_by_the_pool():
    ledger = growLedger(6, 9)
    pool = makePool()
    assert not submitTransaction(pool, fakeRecord(0), ledger = ledger)

def test_ledger_stays_acyclic_with_correct_tips():
    ledger = growLedger(7, 200)
    assert ledger["sizeBlocks"] == 51
    assert recomputeTips(ledger) == ledger["tips"]
    order = topologicalOrder(ledger)
    position = {blockId : i for i, blockId in enumerate(order)}
    for block in ledger["blocks"].values():
        if block["blockId"] == ledger["genesis"]:
            continue
        assert position[block["parentA"]] < position[block["blockId"]]
        assert position[block["parentB"]] < position[block["blockId"]]
        assert block["parentA"] != block["parentB"] or block["parentA"] == ledger["genesis"]

def test_cycle_is_detected():
    ledger = growLedger(8, 12)
    last = ledger["order"][-1]
    ledger["blocks"][ledger["order"][1]]["parentB"] = last
    with pytest.raises(ValueError, match = "cycle"):
        topologicalOrder(ledger)

def test_seeded_ledgers_are_identical(tmp_path):
    textA = exportLedger(growLedger(9, 60), fname = str(tmp_path / "a.txt"))
    textB = exportLedger(growLedger(9, 60))
    assert textA == textB
    assert (tmp_path / "a.txt").read_text(encoding = "utf-8") == textA
    assert len(textA.splitlines()) == 16
    assert exportLedger(growLedger(10, 60)) != textA
