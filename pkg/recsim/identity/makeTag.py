#!/usr/bin/env python3

# Define function ...
def makeTag(
    channel,
    did,
    timestamp,
    /,
):
    """Make the one-time tag of a message

    Parameters
    ----------
    channel : dict
        the channel
    did : str
        the DID of the sender
    timestamp : int
        the time of the message (in seconds)

    Returns
    -------
    tag : bytes
        the HMAC-SHA256 tag of (did, timestamp)
    """

    # Import special modules ...
    try:
        import cryptography
        import cryptography.hazmat.primitives.hashes
        import cryptography.hazmat.primitives.hmac
    except:
        raise Exception("\"cryptography\" is not installed; run \"pip install --user cryptography\"") from None

    # **************************************************************************

    # Check input ...
    if did not in channel["dids"]:
        raise KeyError(f"\"{did}\" is not a participant of \"{channel['channelId']}\"") from None

    # Find the tag ...
    mac = cryptography.hazmat.primitives.hmac.HMAC(channel["secret"], cryptography.hazmat.primitives.hashes.SHA256())
    mac.update(f"{channel['channelId']}|{did}|{timestamp:d}".encode("utf-8"))

    # Return answer ...
    return mac.finalize()
