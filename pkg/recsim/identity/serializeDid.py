#!/usr/bin/env python3

# Define function ...
def serializeDid(
    doc,
    /,
):
    """Serialize a DID document to JSON

    Parameters
    ----------
    doc : dict
        the DID document

    Returns
    -------
    text : str
        the JSON text
    """

    # Import standard modules ...
    import json

    # Return answer ...
    return json.dumps(
        {
                  "did" : doc["did"],
            "publicKey" : doc["publicKey"].hex(),
        },
        sort_keys = True,
    )
