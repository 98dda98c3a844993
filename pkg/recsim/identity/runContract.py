#!/usr/bin/env python3

# Define function ...
def runContract(
    seller,
    bids,
    listing,
    registry,
    channel,
    /,
    *,
      now = 0,
    nonce = "",
):
    """Run the smart contract for one REC listing

    The contract runs in three phases:

    * pre-bidding checks that every party has a registered DID and that the
      listing is signed by the seller;
    * trading authenticates the ask and the bids by their one-time tags on the
      channel of the listing (a bid with a bad tag is dropped) and compares
      the best bid against the ask (a bid matches when it is at least the
      ask);
    * billing checks the token request that the winning buyer signed against
      its registered key, moves the tokens and only then hands the
      certificates over.

    A failure in any phase ends the run without changing any ownership. The
    contract never sees a private key.

    Parameters
    ----------
    seller : dict
        the seller ("did" and "tokens")
    bids : list of dict
        the bids (see "makeBid()")
    listing : dict
        the listing ("listingId", "signedRec", "source", "askPrice",
        "timestamp", "tag" and "certs")
    registry : dict
        the DID registry
    channel : dict
        the channel of the listing, opened with a secret shared by its
        participants
    now : int, optional
        the current time (in seconds)
    nonce : str, optional
        extra text mixed into the identifier of the stored transaction

    Returns
    -------
    outcome : dict
        the status ("settled", "no-match" or "aborted"), the phase it ended
        in, the reason, the DID of the winning buyer (if any) and the stored
        transaction record (if any)
    """

    # Import special modules ...
    try:
        import cryptography
        import cryptography.exceptions
        import cryptography.hazmat.primitives.asymmetric.ed25519
    except:
        raise Exception("\"cryptography\" is not installed; run \"pip install --user cryptography\"") from None

    # Import my modules ...
    from ..ledger import makeRecord
    from .tokenRequest import tokenRequest
    from .verifyRec import verifyRec
    from .verifyTag import verifyTag

    # **************************************************************************

    # Define the outcome ...
    outcome = {
         "status" : "aborted",
          "phase" : "pre-bidding",
         "reason" : None,
          "buyer" : None,
         "record" : None,
    }

    # Check that every party is registered ...
    sellerDid = seller["did"]
    for did in [sellerDid] + [bid["buyer"]["did"] for bid in bids]:
        if did is None or did not in registry:
            outcome["reason"] = f"\"{did}\" is not registered"
            return outcome

    # Check the listing ...
    ok, verdict = verifyRec(listing["signedRec"], registry[sellerDid]["publicKey"], now = now)
    if not ok:
        outcome["reason"] = f"the listing is {verdict}"
        return outcome

    # Authenticate the ask ...
    outcome["phase"] = "trading"
    if not verifyTag(channel, sellerDid, listing["timestamp"], listing["tag"]):
        outcome["reason"] = "the ask could not be authenticated"
        return outcome

    # Collect the authenticated bids ...
    best = None
    for bid in bids:
        if not verifyTag(channel, bid["buyer"]["did"], bid["timestamp"], bid["tag"]):
            continue
        if bid["price"] >= listing["askPrice"] and (best is None or bid["price"] > best["price"]):
            best = bid
    if best is None:
        outcome["status"] = "no-match"
        outcome["reason"] = "no authenticated bid meets the ask"
        return outcome
    buyer = best["buyer"]
    outcome["buyer"] = buyer["did"]

    # Check the token request of the buyer ...
    outcome["phase"] = "billing"
    quantity = len(listing["certs"])
    cost = listing["askPrice"] * quantity
    try:
        cryptography.hazmat.primitives.asymmetric.ed25519.Ed25519PublicKey.from_public_bytes(
            registry[buyer["did"]]["publicKey"]
        ).verify(best["signature"], tokenRequest(listing["listingId"], buyer["did"], best["price"], quantity))
    except cryptography.exceptions.InvalidSignature:
        outcome["reason"] = "the token request is forged"
        return outcome
    if buyer["tokens"] < cost:
        outcome["reason"] = "the buyer has too few tokens"
        return outcome

    # Bill the buyer and hand the certificates over ...
    buyer["tokens"] -= cost
    seller["tokens"] += cost
    for cert in listing["certs"]:
        cert["owner"] = buyer["did"]

    # Store the transaction ...
    outcome["status"] = "settled"
    outcome["record"] = makeRecord(
        sellerDid,
        buyer["did"],
        max(int(now), listing["signedRec"]["tGen"]),
        listing["signedRec"]["tExp"],
        listing["source"],
        listing["askPrice"],
        quantity,
        listing["signedRec"]["tGen"],
        nonce = nonce or listing["listingId"],
    )

    # Return answer ...
    return outcome
