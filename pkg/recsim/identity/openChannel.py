#!/usr/bin/env python3

# Define function ...
def openChannel(
    channelId,
    dids,
    secret,
    /,
):
    """Open a one-time tag channel between participants

    Parameters
    ----------
    channelId : str
        the identifier of the channel
    dids : list of str
        the DIDs of the participants
    secret : bytes
        the key shared by the participants of the channel

    Returns
    -------
    channel : dict
        the channel
    """

    # Check input ...
    if not isinstance(secret, bytes) or len(secret) < 16:
        raise TypeError("the channel secret must be at least 16 bytes") from None

    # Return answer ...
    return {
        "channelId" : channelId,
             "dids" : frozenset(dids),
           "secret" : secret,
         "usedTags" : set(),
    }
