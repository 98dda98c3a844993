#!/usr/bin/env python3

# Define function ...
def generateRecs(
    supplier,
    slot,
    /,
    *,
    carry = False,
):
    """Mint the certificates for the surplus of a slot

    One certificate is minted per whole MWh of surplus. The fractional part is
    dropped unless it is carried over to the next slot.

    Parameters
    ----------
    supplier : dict
        the supplier
    slot : int
        the slot
    carry : bool, optional
        carry the fractional MWh over to the next slot

    Returns
    -------
    count : int
        the number of certificates that were minted
    """

    # Import standard modules ...
    import math

    # **************************************************************************

    # Find the energy that can be certified ...
    energy = float(supplier["surplusMwh"][slot])                                # [MWh]
    if carry:
        energy += supplier["carryMwh"]
    count = int(math.floor(energy + 1.0e-9))
    if carry:
        supplier["carryMwh"] = max(0.0, energy - count)

    # Append a new batch (if needed) ...
    if count > 0:
        supplier["inventory"].append(
            {
                "batchId" : f"{supplier['supplierId']}-{slot:05d}",
                "genTime" : int(slot),
                  "certs" : [
                    {
                               "certId" : f"{supplier['supplierId']}-{slot:05d}-{k:04d}",
                               "source" : supplier["source"],
                              "genTime" : int(slot),
                        "lifetimeTotal" : supplier["lifetime"],
                                "owner" : supplier["supplierId"],
                              "retired" : False,
                    }
                    for k in range(count)
                ],
            }
        )
        supplier["minted"] += count

    # Return answer ...
    return count
