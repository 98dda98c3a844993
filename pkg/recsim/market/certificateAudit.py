#!/usr/bin/env python3

# Define function ...
def certificateAudit(
    market,
    /,
):
    """Audit the certificates in a market

    Every certificate that has been minted is either owned (held by a supplier
    or a consumer) or retired.

    Parameters
    ----------
    market : dict
        the market

    Returns
    -------
    audit : dict
        the number of certificates minted, owned and retired, and whether the
        books balance
    """

    # Initialize counters ...
    minted = 0
    owned = 0
    retired = 0

    # Count the certificates of the suppliers ...
    for supplier in market["suppliers"].values():
        minted += supplier["minted"]
        retired += supplier["retired"]
        for batch in supplier["inventory"]:
            for cert in batch["certs"]:
                if cert["retired"]:
                    retired += 1
                else:
                    owned += 1

    # Count the certificates of the consumers ...
    for consumer in market["consumers"].values():
        for cert in consumer["holdings"]:
            if cert["retired"]:
                retired += 1
            else:
                owned += 1

    # Return answer ...
    return {
          "minted" : minted,
           "owned" : owned,
         "retired" : retired,
        "balanced" : minted == owned + retired,
    }
