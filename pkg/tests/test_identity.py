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
from recsim import EPOCH
from recsim.identity import (
    createDid,
    didFromPublicKey,
    makeBid,
    makeRegistry,
    makeTag,
    openChannel,
    parseDid,
    registerDid,
    runContract,
    serializeDid,
    signRec,
    tokenRequest,
    verifyRec,
    verifyTag,
)
from recsim.ledger import checkRecord

# Define constants ...
LIFETIME = 8760 * 3600                                                          # [s]

# Define helper ...
def party(n, /, *, tokens = 1000.0):
    """Make a contract party from a fixed seed"""
    doc, privateKey = createDid(bytes([n]) * 32)
    return {"did" : doc["did"], "tokens" : tokens}, doc, privateKey

# Define helper ...
def contract(*, bids = (120.0,), tokens = 1000.0, now = EPOCH + 60):
    """Register a seller and some buyers, open their channel, list two certificates and bid on them"""
    registry = makeRegistry()
    seller, doc, sellerKey = party(1, tokens = 0.0)
    registerDid(registry, doc)
    buyers = []
    keys = []
    for i in range(len(bids)):
        buyer, doc, key = party(2 + i, tokens = tokens)
        registerDid(registry, doc)
        buyers.append(buyer)
        keys.append(key)
    channel = openChannel("listing-0001", [seller["did"]] + [buyer["did"] for buyer in buyers], b"\x5a" * 32)
    listing = {
        "listingId" : "listing-0001",
        "signedRec" : signRec(b"wind|2 MWh", sellerKey, EPOCH, EPOCH + LIFETIME),
           "source" : "wind",
         "askPrice" : 100.0,
        "timestamp" : now,
              "tag" : makeTag(channel, seller["did"], now),
            "certs" : [{"certId" : "s00-wind-00000-0000", "owner" : "s00-wind"}, {"certId" : "s00-wind-00000-0001", "owner" : "s00-wind"}],
    }
    offers = [
        makeBid(channel, buyer, key, listing, price, timestamp = now)
        for buyer, key, price in zip(buyers, keys, bids, strict = True)
    ]
    return seller, offers, listing, registry, channel, now

# ******************************************************************************

def test_did_is_derived_from_the_key():
    docA, _ = createDid(b"\x07" * 32)
    docB, _ = createDid(b"\x07" * 32)
    docC, _ = createDid(b"\x08" * 32)
    assert docA == docB
    assert docA["did"] != docC["did"]
    assert docA["did"].startswith("did:rec:")
    assert docA["did"] == didFromPublicKey(docA["publicKey"])
    assert len(docA["publicKey"]) == 32

def test_bad_entropy():
    with pytest.raises(TypeError):
        createDid(b"\x07" * 31)
    with pytest.raises(TypeError):
        createDid("not bytes, thirty-two of them..")
    with pytest.raises(TypeError):
        didFromPublicKey(b"short")

def test_did_round_trip():
    doc, _ = createDid(b"\x09" * 32)
    assert parseDid(serializeDid(doc)) == doc

def test_did_parsing_errors():
    docA, _ = createDid(b"\x0a" * 32)
    docB, _ = createDid(b"\x0b" * 32)
    with pytest.raises(ValueError):
        parseDid("{}")
    with pytest.raises(ValueError):
        parseDid("not json")
    with pytest.raises(ValueError):
        parseDid(serializeDid({"did" : docA["did"], "publicKey" : docB["publicKey"]}))
    with pytest.raises(ValueError):
        parseDid(serializeDid({"did" : "did:web:example.com", "publicKey" : docA["publicKey"]}))

def test_registration():
    registry = makeRegistry()
    docA, _ = createDid(b"\x0c" * 32)
    docB, _ = createDid(b"\x0d" * 32)
    assert registerDid(registry, docA)
    assert not registerDid(registry, docA)
    with pytest.raises(ValueError):
        registerDid(registry, {"did" : docA["did"], "publicKey" : docB["publicKey"]})
    assert len(registry) == 1

def test_dids_are_unique():
    rng = numpy.random.default_rng(1)
    dids = {createDid(rng.bytes(32))[0]["did"] for _ in range(2000)}
    assert len(dids) == 2000

@pytest.mark.slow
def test_dids_are_unique_at_scale():
    rng = numpy.random.default_rng(2)
    dids = {createDid(rng.bytes(32))[0]["did"] for _ in range(100000)}
    assert len(dids) == 100000

def test_signatures():
    docA, keyA = createDid(b"\x0e" * 32)
    docB, _ = createDid(b"\x0f" * 32)
    signed = signRec(b"solar|5 MWh|s01", keyA, 100, 200)
    assert verifyRec(signed, docA["publicKey"]) == (True, "valid")
    assert verifyRec(signed, docA["publicKey"], now = 200) == (True, "valid")
    assert verifyRec(signed, docA["publicKey"], now = 201) == (False, "expired")
    assert verifyRec(signed, docB["publicKey"]) == (False, "forged")

    flipped = dict(signed)
    flipped["payload"] = bytes([signed["payload"][0] ^ 0x01]) + signed["payload"][1:]
    assert verifyRec(flipped, docA["publicKey"]) == (False, "forged")

    stretched = dict(signed)
    stretched["tExp"] = 300
    assert verifyRec(stretched, docA["publicKey"], now = 250) == (False, "forged")

def test_signing_errors():
    _, key = createDid(b"\x10" * 32)
    with pytest.raises(TypeError):
        signRec("text", key, 100, 200)
    with pytest.raises(ValueError):
        signRec(b"bytes", key, 200, 200)

def test_tags_never_verify_twice():
    dids = [createDid(bytes([n]) * 32)[0]["did"] for n in range(20, 25)]
    channel = openChannel("channel-1", dids, b"s" * 32)
    rng = numpy.random.default_rng(3)
    for _ in range(1000):
        did = dids[int(rng.integers(len(dids)))]
        stamp = int(rng.integers(0, 2 ** 40))
        tag = makeTag(channel, did, stamp)
        if tag in channel["usedTags"]:
            continue
        assert verifyTag(channel, did, stamp, tag)
        assert not verifyTag(channel, did, stamp, tag)

def test_tags_are_bound_to_their_pair():
    dids = [createDid(bytes([n]) * 32)[0]["did"] for n in range(30, 32)]
    channel = openChannel("channel-2", dids, b"k" * 16)
    tag = makeTag(channel, dids[0], 5)
    assert not verifyTag(channel, dids[1], 5, tag)
    assert not verifyTag(channel, dids[0], 6, tag)
    assert not verifyTag(channel, "did:rec:" + "0" * 64, 5, tag)
    assert verifyTag(channel, dids[0], 5, tag)
    with pytest.raises(KeyError):
        makeTag(channel, "did:rec:" + "0" * 64, 5)
    with pytest.raises(TypeError):
        openChannel("channel-3", dids, b"short")

def test_contract_happy_path():
    seller, bids, listing, registry, channel, now = contract(bids = (110.0, 130.0, 90.0))
    outcome = runContract(seller, bids, listing, registry, channel, now = now)
    buyers = [bid["buyer"] for bid in bids]
    assert outcome["status"] == "settled"
    assert outcome["phase"] == "billing"
    assert outcome["buyer"] == buyers[1]["did"]
    assert all(cert["owner"] == buyers[1]["did"] for cert in listing["certs"])
    assert buyers[1]["tokens"] == pytest.approx(800.0)
    assert buyers[0]["tokens"] == pytest.approx(1000.0)
    assert seller["tokens"] == pytest.approx(200.0)
    record = outcome["record"]
    assert checkRecord(record) == []
    assert record["recAmount"] == 2
    assert record["sellerDid"] == seller["did"]

def test_contract_without_a_match():
    seller, bids, listing, registry, channel, now = contract(bids = (80.0, 99.5))
    outcome = runContract(seller, bids, listing, registry, channel, now = now)
    assert outcome["status"] == "no-match"
    assert outcome["record"] is None
    assert all(cert["owner"] == "s00-wind" for cert in listing["certs"])

def test_contract_drops_bids_with_bad_tags():
    seller, bids, listing, registry, channel, now = contract(bids = (120.0,))
    bids[0]["tag"] = bytes([bids[0]["tag"][0] ^ 0x01]) + bids[0]["tag"][1:]
    outcome = runContract(seller, bids, listing, registry, channel, now = now)
    assert (outcome["status"], outcome["phase"]) == ("no-match", "trading")
    assert bids[0]["buyer"]["tokens"] == 1000.0

    seller, bids, listing, registry, channel, now = contract(bids = (120.0, 110.0))
    bids[0]["timestamp"] += 1
    outcome = runContract(seller, bids, listing, registry, channel, now = now)
    assert outcome["status"] == "settled"
    assert outcome["buyer"] == bids[1]["buyer"]["did"]

def test_contract_rejects_a_tampered_ask():
    seller, bids, listing, registry, channel, now = contract()
    listing["tag"] = makeTag(channel, bids[0]["buyer"]["did"], now)
    outcome = runContract(seller, bids, listing, registry, channel, now = now)
    assert (outcome["status"], outcome["phase"]) == ("aborted", "trading")
    assert outcome["reason"] == "the ask could not be authenticated"

    seller, bids, listing, registry, _, now = contract()
    stranger = openChannel("listing-0001", [seller["did"]] + [bid["buyer"]["did"] for bid in bids], b"\xa5" * 32)
    outcome = runContract(seller, bids, listing, registry, stranger, now = now)
    assert outcome["reason"] == "the ask could not be authenticated"

def test_contract_cannot_be_replayed():
    seller, bids, listing, registry, channel, now = contract()
    assert runContract(seller, bids, listing, registry, channel, now = now)["status"] == "settled"
    outcome = runContract(seller, bids, listing, registry, channel, now = now)
    assert outcome["reason"] == "the ask could not be authenticated"
    assert bids[0]["buyer"]["tokens"] == pytest.approx(800.0)

def test_contract_billing_failures_leave_ownership_alone():
    seller, bids, listing, registry, channel, now = contract(tokens = 150.0)
    outcome = runContract(seller, bids, listing, registry, channel, now = now)
    assert (outcome["status"], outcome["phase"]) == ("aborted", "billing")
    assert outcome["reason"] == "the buyer has too few tokens"
    assert all(cert["owner"] == "s00-wind" for cert in listing["certs"])
    assert bids[0]["buyer"]["tokens"] == 150.0

    seller, bids, listing, registry, channel, now = contract()
    _, _, wrongKey = party(99)
    bids[0]["signature"] = wrongKey.sign(tokenRequest(listing["listingId"], bids[0]["buyer"]["did"], 120.0, 2))
    outcome = runContract(seller, bids, listing, registry, channel, now = now)
    assert (outcome["status"], outcome["phase"]) == ("aborted", "billing")
    assert outcome["reason"] == "the token request is forged"
    assert all(cert["owner"] == "s00-wind" for cert in listing["certs"])
    assert seller["tokens"] == 0.0

    seller, bids, listing, registry, channel, now = contract()
    bids[0]["price"] = 150.0
    outcome = runContract(seller, bids, listing, registry, channel, now = now)
    assert outcome["reason"] == "the token request is forged"

def test_contract_pre_bidding_checks():
    seller, bids, listing, registry, channel, now = contract()
    del registry[bids[0]["buyer"]["did"]]
    outcome = runContract(seller, bids, listing, registry, channel, now = now)
    assert (outcome["status"], outcome["phase"]) == ("aborted", "pre-bidding")

    seller, bids, listing, registry, channel, now = contract()
    listing["signedRec"]["payload"] = b"wind|20 MWh"
    outcome = runContract(seller, bids, listing, registry, channel, now = now)
    assert outcome["reason"] == "the listing is forged"

    seller, bids, listing, registry, channel, _ = contract()
    outcome = runContract(seller, bids, listing, registry, channel, now = EPOCH + LIFETIME + 1)
    assert outcome["reason"] == "the listing is expired"
