#!/usr/bin/env python3

# Define function ...
def verifyTag(
    channel,
    did,
    timestamp,
    tag,
    /,
):
    """Verify the one-time tag of a message

    A tag verifies once; any replay of it fails.

    Parameters
    ----------
    channel : dict
        the channel
    did : str
        the DID of the sender
    timestamp : int
        the time of the message (in seconds)
    tag : bytes
        the tag

    Returns
    -------
    ok : bool
        whether the tag is valid and has not been used before
    """

    # Import special modules ...
    try:
        import cryptography
        import cryptography.exceptions
        import cryptography.hazmat.primitives.hashes
        import cryptography.hazmat.primitives.hmac
    except:
        raise Exception("\"cryptography\" is not installed; run \"pip install --user cryptography\"") from None

    # **************************************************************************

    # Reject strangers and replays ...
    if did not in channel["dids"] or tag in channel["usedTags"]:
        return False

    # Check the tag ...
    mac = cryptography.hazmat.primitives.hmac.HMAC(channel["secret"], cryptography.hazmat.primitives.hashes.SHA256())
    mac.update(f"{channel['channelId']}|{did}|{timestamp:d}".encode("utf-8"))
    try:
        mac.verify(tag)
    except cryptography.exceptions.InvalidSignature:
        return False

    # Remember the tag ...
    channel["usedTags"].add(tag)

    # Return answer ...
    return True
