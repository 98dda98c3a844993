#!/usr/bin/env python3

"""
A seedable simulator of a renewable energy certificate (REC) market settled on
a DAG ledger that is validated by reputation-weighted Fast Probabilistic
Consensus.
"""

# Define the renewable sources that may back a certificate ...
SOURCES = (
    "biomass",
    "hydro",
    "wind",
    "solar",
)

# Define the simulation clock ...
EPOCH = 1609459200                                                              # [s]; 2021-01-01T00:00:00Z
SLOT_SECONDS = 3600                                                             # [s]
SLOTS_PER_YEAR = 8760                                                           # [#]

# Define the ledger pool sizing ...
RECORD_BYTES = 128                                                              # [B]
POOL_CAPACITY_BYTES = 1048576                                                   # [B]

# Import sub-modules ...
from . import baselines
from . import fpc
from . import identity
from . import ledger
from . import market
from . import privacy
from . import sim
