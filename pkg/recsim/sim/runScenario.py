#!/usr/bin/env python3

# Define function ...
def runScenario(
    config,
    /,
    *,
     debug = False,
    outDir = None,
):
    """Run a scenario slot by slot

    Every slot runs as one market step:

    1. the reputations of the validators decay;
    2. the suppliers retire their expired certificates, set their base price
       from the scarcity of their source, mint (and sign) the certificates of
       their surplus and list their oldest batches;
    3. the consumers that lag their green ratio target choose their bids;
    4. the book is matched and the buyers are (optionally) routed through
       privacy accounts;
    5. each trade is settled through its smart contract (the seller and the
       buyer tag their ask and bid on a channel of their own and the buyer
       signs its token request) and the records that would fill each block
       are validated by a round of reputation-weighted consensus before they
       are packed (with a Sybil double spend attempt injected every
       "conflict_every" blocks, whose forged record replaces the honest one
       if it wins the vote);
    6. the penalties accrue and one row of metrics is logged.

    The run is fully determined by the configuration (including its seed).

    Parameters
    ----------
    config : dict
        the configuration (see "loadConfig()")
    debug : bool, optional
        re-check the invariants of the ledger and the market after every
        mutation
    outDir : str, optional
        the directory to write "trades.csv", "metrics.csv", "ledger.txt",
        "consensus.csv", "validations.csv" and "public_view.csv" to

    Returns
    -------
    results : dict
        the rows of every output and a summary of the run
    """

    # Import standard modules ...
    import math
    import os

    # Import special modules ...
    try:
        import numpy
    except:
        raise Exception("\"numpy\" is not installed; run \"pip install --user numpy\"") from None

    # Import my modules ...
    from .. import SOURCES
    from ..baselines import makeCostModel, txEnergy, txTime
    from ..fpc import decayReputation, makeConflict, makeNode, makeNodes, makeParams, recordActivity, runFpc
    from ..identity import createDid, makeBid, makeRegistry, makeTag, openChannel, registerDid, signRec, verifyRec
    from ..ledger import exportLedger, makeLedger, makePool, makeRecord, packBlock, peekBlock, replaceTransaction, slotTime
    from ..market import certificateAudit, chooseBid, generateRecs, greenRatio, listAsks, makeClock, makeConsumer, makeMarket, makeOrder, makeSupplier, matchOrders, penaltyFee, retireExpired, settle, updateBasePrice
    from ..privacy import anonymityMetrics, classify, exportPublicView, makeAccountGraph, makeActivityStats, publicView, recordVolume, registerPrincipal, routeTransaction, tombstoneAccount
    from .loadDemandCsv import loadDemandCsv
    from .loadGenerationCsv import loadGenerationCsv
    from .writeRows import writeRows

    # **************************************************************************

    # Create short-hands ...
    nSlots = config["n_slots"]
    lifetime = config["lifetime_slots"]
    bounds = (config["price_min"], config["price_max"])

    # Spawn an independent random number generator for each subsystem ...
    # NOTE: The market itself is deterministic.
    rngLedger, rngConsensus, rngPrivacy, rngIdentity = [
        numpy.random.default_rng(seq)
        for seq in numpy.random.SeedSequence(config["seed"]).spawn(4)
    ]

    # Load the data ...
    generation = loadGenerationCsv(config["generation_csv"], nSlots = nSlots)
    demand = loadDemandCsv(config["demand_csv"], nSlots = nSlots)
    if len(demand) != config["n_consumers"]:
        raise ValueError(f"\"{config['demand_csv']}\" has {len(demand):,d} consumers but the scenario needs {config['n_consumers']:,d}") from None
    if config["n_suppliers"] < len(generation):
        raise ValueError(f"{config['n_suppliers']:,d} suppliers cannot cover {len(generation):,d} sources") from None

    # **************************************************************************

    # Make the suppliers, spreading each source evenly over its suppliers ...
    sources = list(generation)
    shares = {source : 0 for source in sources}
    for i in range(config["n_suppliers"]):
        shares[sources[i % len(sources)]] += 1
    suppliers = []
    for i in range(config["n_suppliers"]):
        source = sources[i % len(sources)]
        suppliers.append(
            makeSupplier(
                f"s{i:02d}-{source}",
                source,
                generation[source] / shares[source],
                initialPrice = config["initial_price"],
                    lifetime = lifetime,
                 priceBounds = bounds,
            )
        )

    # Make the consumers ...
    if config["green_targets"]:
        targets = [float(target) for target in config["green_targets"].split(",")]
    else:
        targets = [config["green_target"]] * len(demand)
    if len(targets) != len(demand):
        raise ValueError(f"there are {len(targets):,d} green ratio targets for {len(demand):,d} consumers") from None
    consumers = [
        makeConsumer(
            consumerId,
            series["consumptionMwh"],
            series["ownRenewableMwh"],
            target,
            bidBounds = bounds,
                gamma = config["gamma"],
               tokens = config["initial_tokens"],
        )
        for (consumerId, series), target in zip(demand.items(), targets, strict = True)
    ]
    market = makeMarket(suppliers, consumers)

    # Issue a DID to every principal ...
    registry = makeRegistry()
    keys = {}
    for principal in suppliers + consumers:
        doc, key = createDid(rngIdentity.bytes(32))
        registerDid(registry, doc)
        principal["did"] = doc["did"]
        keys[doc["did"]] = key

    # Open the original account of every buyer ...
    graph = makeAccountGraph(rngPrivacy)
    for consumer in consumers:
        consumer["account"] = registerPrincipal(graph, consumer["consumerId"])

    # Make the ledger and the validators ...
    ledger = makeLedger(createdAt = slotTime(0))
    pool = makePool()
    nodes = makeNodes(config["n_validators"])
    params = makeParams(
                    beta = config["beta"],
        firstRoundBounds = (config["first_round_low"], config["first_round_high"]),
                     lam = config["lambda"],
            omegaInitial = config["omega_initial"],
              quorumSize = config["quorum_size"],
                  rounds = config["rounds"],
    )
    nodeIds = list(nodes)
    hosts = {}
    for i, principal in enumerate(sorted([supplier["supplierId"] for supplier in suppliers] + [consumer["consumerId"] for consumer in consumers])):
        hosts[principal] = nodeIds[i % len(nodeIds)]
    validations = {nodeId : 0 for nodeId in nodeIds}

    # Make the cost model that the metrics are reported in ...
    model = makeCostModel(config["consensus_kind"], quorumSize = config["quorum_size"])
    meanTarget = float(numpy.mean(targets))
    clock = makeClock(config["deadline_slots"])

    # Initialize lists and counters ...
    tradeRows = []
    metricRows = []
    consensusRows = []
    nBlocks = 0
    nSybils = 0

    # **************************************************************************

    # Loop over slots ...
    for slot in range(nSlots):
        if slot % 1000 == 0:
            print(f"Running slot {slot + 1:,d}/{nSlots:,d} ...")

        try:
            # Advance the clock and decay the reputations ...
            clock["slot"] = slot
            clock["tRemain"] = clock["tMax"] - slot
            for node in nodes.values():
                decayReputation(node, slot, lam = config["lambda"])

            # Price, mint and sign the certificates ...
            meanSurplus = float(numpy.mean([supplier["surplusMwh"][slot] for supplier in suppliers]))   # [MWh]
            for supplier in suppliers:
                retireExpired(supplier, slot)
                updateBasePrice(supplier, slot, meanSurplus, elasticity = config["scarcity_elasticity"])
                if generateRecs(supplier, slot, carry = config["carry_surplus"]) > 0:
                    batch = supplier["inventory"][-1]
                    batch["signedRec"] = signRec(
                        batch["batchId"].encode("utf-8"),
                        keys[supplier["did"]],
                        slotTime(slot),
                        slotTime(slot + lifetime),
                    )
                    ok, verdict = verifyRec(batch["signedRec"], registry[supplier["did"]]["publicKey"], now = slotTime(slot))
                    if not ok:
                        raise RuntimeError(f"batch \"{batch['batchId']}\" is {verdict}")

            # List the asks ...
            asks = []
            for supplier in suppliers:
                asks += listAsks(supplier, slot, depth = config["listing_depth"], seq = len(asks))
            if asks:
                clock["pMax"] = max(ask["price"] for ask in asks)
            elif clock["pMax"] is None:
                clock["pMax"] = config["initial_price"]
            qMax = max(1, math.floor(config["q_max_share"] * sum(ask["quantity"] for ask in asks)))

            # Choose the bids ...
            bids = []
            for consumer in consumers:
                consumer["qMax"] = qMax
                if consumer["cumConsumptionMwh"][slot] <= 0.0:
                    continue
                bid = chooseBid(consumer, clock, slot)
                if bid is None or bid["quantity"] < 1:
                    continue
                order = makeOrder("bid", consumer["account"], bid["price"], bid["quantity"], slot, seq = len(bids))
                order["consumerId"] = consumer["consumerId"]
                bids.append(order)

            # Match the book ...
            trades = matchOrders(asks, bids)
            if debug:
                for trade in trades:
                    assert trade["ask"]["price"] <= trade["price"] <= trade["bidPrice"], f"trade \"{trade['tradeId']}\" is outside the bounds of its parties"

            # Route the buyers through their privacy accounts ...
            routes = None
            if config["privacy_enabled"] and trades:
                amounts = {}
                for trade in trades:
                    consumerId = trade["bid"]["consumerId"]
                    amounts[consumerId] = amounts.get(consumerId, 0) + trade["quantity"]
                stats = makeActivityStats(graph, amounts, slot, window = config["activity_window"])
                routes = {}
                for trade in trades:
                    consumerId = trade["bid"]["consumerId"]
                    decision = classify(graph, consumerId, trade["quantity"], stats["activity"][consumerId], stats)
                    routes[trade["tradeId"]] = routeTransaction(
                        graph,
                        decision,
                        consumerId,
                        trade["quantity"],
                        stats,
                        maxProxies = config["max_proxies"],
                    )

            # Open a channel and make the authenticated ask and bid of each trade ...
            # NOTE: The channel secret is known to the two parties only and the
            #       bid is signed by the buyer before the contract sees it.
            now = slotTime(slot)
            contracts = {}
            for trade in trades:
                supplier = market["suppliers"][trade["ask"]["supplierId"]]
                consumer = market["consumers"][trade["bid"]["consumerId"]]
                channel = openChannel(trade["tradeId"], [supplier["did"], consumer["did"]], rngIdentity.bytes(32))
                listing = {
                    "listingId" : trade["tradeId"],
                    "signedRec" : trade["ask"]["batch"]["signedRec"],
                       "source" : trade["ask"]["source"],
                     "askPrice" : trade["price"],
                     "quantity" : trade["quantity"],
                    "timestamp" : now,
                          "tag" : makeTag(channel, supplier["did"], now),
                }
                contracts[trade["tradeId"]] = {
                    "listing" : listing,
                    "channel" : channel,
                       "bids" : [makeBid(channel, consumer, keys[consumer["did"]], listing, trade["bidPrice"], timestamp = now)],
                }

            # Settle the trades ...
            settled = settle(
                trades,
                market,
                pool,
                slot,
                contracts = contracts,
                   ledger = ledger,
                 registry = registry,
                   routes = routes,
            )
            nRecords = 0
            for trade in settled:
                consumerId = trade["bid"]["consumerId"]
                supplierId = trade["ask"]["supplierId"]
                recordVolume(
                    graph,
                    consumerId,
                    [(rec["buyerAccount"], rec["recAmount"]) for rec in trade["records"]],
                    slot,
                )
                recordActivity(nodes[hosts[consumerId]], True, slot)
                recordActivity(nodes[hosts[supplierId]], True, slot)
                nRecords += len(trade["records"])
                tradeRows.append(
                    {
                                 "slot" : slot,
                        "buyer_account" : "|".join(trade["accounts"]),
                           "seller_did" : trade["records"][0]["sellerDid"],
                               "source" : trade["ask"]["source"],
                                "price" : trade["price"],
                             "quantity" : trade["quantity"],
                    }
                )
            if routes is not None:
                for legs in routes.values():
                    for accountId, _ in legs:
                        if graph["accounts"][accountId]["kind"] == "empty" and not graph["accounts"][accountId]["tombstoned"]:
                            tombstoneAccount(graph, accountId)
            if debug:
                audit = certificateAudit(market)
                assert audit["balanced"], f"{audit['minted']:,d} certificates were minted but {audit['owned']:,d} are owned and {audit['retired']:,d} are retired"

            # Validate the records before they are packed, one block at a time
            # (full blocks first, then whatever is left) ...
            # NOTE: Every "conflict_every"-th block, a freshly joined node
            #       tries to double spend the first record of the block. Only
            #       the winner of the vote is packed.
            flush = False
            while True:
                payload = peekBlock(pool, flush = flush)
                if payload is None:
                    if flush:
                        break
                    flush = True
                    continue
                nBlocks += 1
                honest = payload[0]

                # Decide what is being voted on ...
                forged = None
                if nBlocks % config["conflict_every"] == 0:
                    nSybils += 1
                    sybilId = f"sybil{nSybils:04d}"
                    nodes[sybilId] = makeNode(sybilId, now = slot, reputation = config["sybil_reputation"])
                    validations[sybilId] = 0
                    forged = makeRecord(
                        honest["sellerDid"],
                        sybilId,
                        honest["timestamp"],
                        honest["expirationDate"],
                        honest["recSource"],
                        honest["recPrice"],
                        honest["recAmount"],
                        honest["genTime"],
                        nonce = f"double-spend/{sybilId}",
                    )
                    conflict = makeConflict(
                        honest["txId"],
                        forged["txId"],
                        conflictId = f"c{nBlocks:06d}",
                        submitterB = sybilId,
                    )
                else:
                    sybilId = None
                    conflict = makeConflict(
                        honest["txId"],
                        None,
                        conflictId = f"c{nBlocks:06d}",
                    )

                # Set the opinions and vote ...
                for node in nodes.values():
                    node["opinion"] = "favor_a"
                if sybilId is not None:
                    nodes[sybilId]["opinion"] = "favor_b"
                runFpc(conflict, nodes, params, rngConsensus, floor = config["weight_floor"], now = slot)
                for nodeId in conflict["participants"]:
                    validations[nodeId] += 1

                # Swap the forged record in if it won and pack the block ...
                if forged is not None and conflict["resolution"] == "b_wins":
                    replaceTransaction(pool, honest["txId"], forged, ledger = ledger)
                block = packBlock(pool, ledger, rngLedger, createdAt = slotTime(slot), debug = debug, flush = flush)
                consensusRows.append(
                    {
                        "conflict_id" : conflict["conflictId"],
                               "slot" : slot,
                           "block_id" : block["blockId"],
                          "contested" : sybilId is not None,
                        "candidate_a" : conflict["candidateA"],
                        "candidate_b" : conflict["candidateB"],
                         "resolution" : conflict["resolution"],
                             "rounds" : conflict["rounds"],
                            "queries" : conflict["queries"],
                         "mean_query" : conflict["meanQuery"],
                    }
                )

            # Accrue the penalties ...
            for consumer in consumers:
                if consumer["cumConsumptionMwh"][slot] > 0.0:
                    consumer["penaltyPaid"] += penaltyFee(consumer, slot)
        except (KeyError, RuntimeError, ValueError, ZeroDivisionError) as err:
            raise type(err)(f"slot {slot:,d}: {err}") from err

        # **********************************************************************

        # Log the metrics ...
        row = {
                       "slot" : slot,
             "consensus_kind" : config["consensus_kind"],
               "mean_tx_time" : txTime(model, ledger["sizeBlocks"], meanTarget),
               "energy_units" : txEnergy(model, ledger["sizeBlocks"], nTx = nRecords),
            "trades_executed" : len(settled),
        }
        for source in SOURCES:
            prices = [trade["price"] for trade in settled if trade["ask"]["source"] == source]
            row[f"price_{source}"] = float(numpy.mean(prices)) if prices else None
        for consumer in consumers:
            if consumer["cumConsumptionMwh"][slot] > 0.0:
                row[f"green_ratio_{consumer['consumerId']}"] = greenRatio(consumer, slot)[0]
            else:
                row[f"green_ratio_{consumer['consumerId']}"] = None
        view = publicView(graph)
        row["account_stddev"] = anonymityMetrics(view)["stddev"] if view else 0.0
        metricRows.append(row)

    # **************************************************************************

    # Summarise the run ...
    view = publicView(graph)
    summary = {
                   "trades" : len(tradeRows),
                   "volume" : sum(row["quantity"] for row in tradeRows),
                  "penalty" : sum(consumer["penaltyPaid"] for consumer in consumers),
                   "blocks" : nBlocks,
                "conflicts" : nSybils,
                    "audit" : certificateAudit(market),
                "anonymity" : anonymityMetrics(view) if view else None,
        "meanPriceBySource" : {},
    }
    for source in SOURCES:
        prices = [row["price"] for row in tradeRows if row["source"] == source]
        if prices:
            summary["meanPriceBySource"][source] = float(numpy.average(prices, weights = [row["quantity"] for row in tradeRows if row["source"] == source]))

    # Collect the results ...
    results = {
             "trades" : tradeRows,
            "metrics" : metricRows,
          "consensus" : consensusRows,
        "validations" : [
            {
                    "node_id" : nodeId,
                "validations" : validations[nodeId],
                 "reputation" : nodes[nodeId]["rActivity"],
                   "isolated" : nodes[nodeId]["isolated"],
            }
            for nodeId in nodes
        ],
         "publicView" : view,
            "summary" : summary,
             "market" : market,
             "ledger" : ledger,
              "graph" : graph,
    }

    # Write the outputs (if needed) ...
    if outDir is not None:
        os.makedirs(outDir, exist_ok = True)
        writeRows(results["trades"], os.path.join(outDir, "trades.csv"), ["slot", "buyer_account", "seller_did", "source", "price", "quantity"])
        writeRows(results["metrics"], os.path.join(outDir, "metrics.csv"), list(metricRows[0]) if metricRows else ["slot"])
        writeRows(results["consensus"], os.path.join(outDir, "consensus.csv"), ["conflict_id", "slot", "block_id", "contested", "candidate_a", "candidate_b", "resolution", "rounds", "queries", "mean_query"])
        writeRows(results["validations"], os.path.join(outDir, "validations.csv"), ["node_id", "validations", "reputation", "isolated"])
        exportLedger(ledger, fname = os.path.join(outDir, "ledger.txt"))
        exportPublicView(view, os.path.join(outDir, "public_view.csv"))

    # Return answer ...
    return results
