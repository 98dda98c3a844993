#!/usr/bin/env python3

# Define function ...
def scaleFactor(
    scaling,
    ledgerSize,
    /,
):
    """Evaluate a ledger scaling descriptor

    Parameters
    ----------
    scaling : dict
        the descriptor; its "class" is one of "constant", "linear" (1 + L/ref),
        "superlinear" (L ** exponent) or "logarithmic"
        (1 + slope * log10(max(L, ref) / ref))
    ledgerSize : int
        the size of the ledger (in blocks)

    Returns
    -------
    factor : float
        the scale factor
    """

    # Import standard modules ...
    import math

    # **************************************************************************

    # Check input ...
    if ledgerSize < 1:
        raise ValueError(f"the ledger size must be at least 1 (not {ledgerSize})") from None

    # Evaluate the descriptor ...
    if scaling["class"] == "constant":
        return 1.0
    if scaling["class"] == "linear":
        return 1.0 + ledgerSize / scaling["reference"]
    if scaling["class"] == "superlinear":
        return float(ledgerSize) ** scaling["exponent"]
    if scaling["class"] == "logarithmic":
        return 1.0 + scaling["slope"] * math.log10(max(ledgerSize, scaling["reference"]) / scaling["reference"])

    # Catch errors ...
    raise ValueError(f"\"{scaling['class']}\" is not a known scaling class") from None
