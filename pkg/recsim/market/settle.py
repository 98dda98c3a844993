#!/usr/bin/env python3

# Define function ...
def settle(
    trades,
    market,
    pool,
    slot,
    /,
    *,
    contracts = None,
       ledger = None,
     registry = None,
       routes = None,
):
    """Settle trades

    The certificates held by the consumers that have reached the end of their
    lifetime are retired first. Then, for each trade, the certificates are
    transferred from the batch of the ask to the buyer, the tokens are moved
    from the buyer to the seller and one transaction record per buyer account
    is submitted to the pool. A trade that cannot be honoured (an expired
    certificate, too few certificates, too few tokens or a failed contract) is
    voided and an audit record is kept instead.

    When a contract is given for a trade, it is run on the certificates of the
    trade and it does the billing; its single record is replaced by the
    records of the legs.

    Parameters
    ----------
    trades : list of dict
        the trades
    market : dict
        the market
    pool : dict
        the ledger pool
    slot : int
        the current slot
    contracts : dict, optional
        the "listing" (without its certificates), the "bids" and the "channel"
        of each trade, keyed by trade identifier (see "runContract()")
    ledger : dict, optional
        the ledger (to reject records that have already been committed)
    registry : dict, optional
        the DID registry (needed by the contracts)
    routes : dict, optional
        the (account, quantity) legs of each trade, keyed by trade identifier;
        a trade without routes is settled to the account of the buyer

    Returns
    -------
    settled : list of dict
        the trades that were settled
    """

    # Import standard modules ...
    import heapq

    # Import my modules ...
    from ..identity import runContract
    from ..ledger import makeRecord, slotTime, submitTransaction
    from .remainingLifetime import remainingLifetime

    # **************************************************************************

    # Check input ...
    if contracts is not None and registry is None:
        raise ValueError("contracts cannot be run without a registry") from None

    # Retire the expired holdings ...
    for consumer in market["consumers"].values():
        while consumer["expiring"] and consumer["expiring"][0][0] <= slot:
            _, _, cert = heapq.heappop(consumer["expiring"])
            cert["retired"] = True

    # Initialize list ...
    settled = []

    # Loop over trades ...
    for trade in trades:
        # Check that the trade has not been settled before ...
        tradeId = trade["tradeId"]
        if tradeId in market["settled"]:
            raise ValueError(f"trade \"{tradeId}\" has already been settled") from None
        market["settled"].add(tradeId)

        # Find the parties ...
        supplier = market["suppliers"][trade["ask"]["supplierId"]]
        consumer = market["consumers"][trade["bid"]["consumerId"]]
        batch = trade["ask"]["batch"]
        quantity = trade["quantity"]
        cost = trade["price"] * quantity
        contract = None
        if contracts is not None:
            contract = contracts.get(tradeId)

        # Check if the trade must be voided ...
        reason = None
        if any(cert["retired"] or remainingLifetime(cert, slot) <= 0 for cert in batch["certs"][:quantity]):
            reason = "expired certificate"
        elif len(batch["certs"]) < quantity:
            reason = "insufficient certificates"
        elif contract is not None:
            outcome = runContract(
                supplier,
                contract["bids"],
                contract["listing"] | {"certs" : batch["certs"][:quantity]},
                registry,
                contract["channel"],
                  now = slotTime(slot),
                nonce = tradeId,
            )
            if outcome["status"] != "settled":
                reason = f"contract {outcome['status']} in {outcome['phase']}: {outcome['reason']}"
        elif consumer["tokens"] < cost:
            reason = "insufficient tokens"
        if reason is not None:
            market["audit"].append(
                {
                     "tradeId" : tradeId,
                        "slot" : int(slot),
                      "reason" : reason,
                  "supplierId" : supplier["supplierId"],
                  "consumerId" : consumer["consumerId"],
                    "quantity" : quantity,
                }
            )
            continue

        # Find the legs ...
        legs = [(consumer["account"], quantity)]
        if routes is not None and tradeId in routes:
            legs = routes[tradeId]
        if sum(legQuantity for _, legQuantity in legs) != quantity:
            raise ValueError(f"the routes of trade \"{tradeId}\" do not add up to {quantity:d}") from None

        # Transfer the certificates ...
        certs = batch["certs"][:quantity]
        del batch["certs"][:quantity]
        if not batch["certs"] and batch in supplier["inventory"]:
            supplier["inventory"].remove(batch)
        k = 0
        for account, legQuantity in legs:
            for cert in certs[k:k + legQuantity]:
                cert["owner"] = account
            k += legQuantity
        for i, cert in enumerate(certs):
            heapq.heappush(consumer["expiring"], (cert["genTime"] + cert["lifetimeTotal"], consumer["recsOwned"] + i, cert))
        consumer["holdings"].extend(certs)
        consumer["recsOwned"] += quantity

        # Transfer the tokens (unless the contract has done so already) ...
        if contract is None:
            consumer["tokens"] -= cost
            supplier["tokens"] += cost

        # Submit one record per leg ...
        trade["records"] = []
        for n, (account, legQuantity) in enumerate(legs):
            rec = makeRecord(
                supplier["did"] or supplier["supplierId"],
                account,
                slotTime(slot),
                slotTime(batch["genTime"] + supplier["lifetime"]),
                supplier["source"],
                trade["price"],
                legQuantity,
                slotTime(batch["genTime"]),
                nonce = f"{tradeId}/{n:d}",
            )
            if not submitTransaction(pool, rec, ledger = ledger):
                raise ValueError(f"the record of trade \"{tradeId}\" is a duplicate") from None
            trade["records"].append(rec)
        trade["accounts"] = [account for account, _ in legs]
        settled.append(trade)

    # Return answer ...
    return settled
