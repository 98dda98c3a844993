#!/usr/bin/env python3

# Define function ...
def makeRegistry():
    """Make an empty DID registry

    Returns
    -------
    registry : dict
        the registry, keyed by DID
    """

    # Return answer ...
    return {}
