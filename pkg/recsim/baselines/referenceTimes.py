#!/usr/bin/env python3

# Define function ...
def referenceTimes():
    """Return the measured transaction times per REC

    The times (in seconds) were measured on a reference rig for each
    consensus kind, for three ledger sizes (in blocks) and three green ratio
    targets. They are used to calibrate the cost models once.

    Returns
    -------
    times : dict
        the times, keyed by consensus kind, then ledger size, then green ratio
    """

    # Return answer ...
    return {
        "pow" : {
              100 : {0.3 : 0.00639, 0.6 : 0.00658, 0.9 : 0.00662},
             1000 : {0.3 : 5.3727, 0.6 : 5.7421, 0.9 : 6.1936},
            10000 : {0.3 : 521.3334, 0.6 : 548.2847, 0.9 : 561.3944},
        },
        "prism" : {
              100 : {0.3 : 0.00233, 0.6 : 0.00241, 0.9 : 0.00309},
             1000 : {0.3 : 1.8983, 0.6 : 2.1054, 0.9 : 2.9255},
            10000 : {0.3 : 189.4180, 0.6 : 239.2054, 0.9 : 263.1162},
        },
        "pos" : {
              100 : {0.3 : 0.0004, 0.6 : 0.0004, 0.9 : 0.0005},
             1000 : {0.3 : 0.0022, 0.6 : 0.0027, 0.9 : 0.0029},
            10000 : {0.3 : 0.0281, 0.6 : 0.0355, 0.9 : 0.0379},
        },
        "fpc_rep" : {
              100 : {0.3 : 0.00053, 0.6 : 0.00054, 0.9 : 0.00053},
             1000 : {0.3 : 0.00153, 0.6 : 0.00163, 0.9 : 0.00153},
            10000 : {0.3 : 0.00169, 0.6 : 0.00209, 0.9 : 0.00329},
        },
    }
