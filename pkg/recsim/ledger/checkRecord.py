#!/usr/bin/env python3

# Define function ...
def checkRecord(
    rec,
    /,
):
    """Check a transaction record

    This function lists every way in which a transaction record breaks the
    rules that all records on the ledger must obey.

    Parameters
    ----------
    rec : dict
        the record

    Returns
    -------
    problems : list of str
        the broken rules (an empty list means that the record is valid)
    """

    # Import standard modules ...
    import numbers

    # Import my modules ...
    from .. import SOURCES

    # **************************************************************************

    # Initialize list ...
    problems = []

    # Check the identifier ...
    txId = rec.get("txId")
    if not isinstance(txId, str) or len(txId) != 64:
        problems.append("tx_id is not a 32-byte hexadecimal string")
    else:
        try:
            bytes.fromhex(txId)
        except ValueError:
            problems.append("tx_id is not a 32-byte hexadecimal string")

    # Check the amount and the price ...
    if not isinstance(rec.get("recAmount"), numbers.Integral) or rec["recAmount"] < 1:
        problems.append("rec_amount must be a positive integer")
    if not rec.get("recPrice", -1.0) >= 0.0:
        problems.append("rec_price must be non-negative")

    # Check the source ...
    if rec.get("recSource") not in SOURCES:
        problems.append(f"rec_source \"{rec.get('recSource')}\" is not renewable")

    # Check the times ...
    if not rec["expirationDate"] > rec["timestamp"]:
        problems.append("expiration_date must be after timestamp")
    if not rec["timestamp"] >= rec["genTime"]:
        problems.append("timestamp must not be before gen_time")

    # Return answer ...
    return problems
