#!/usr/bin/env python3

# Import sub-functions ...
from .decayReputation import decayReputation
from .isolateNode import isolateNode
from .makeConflict import makeConflict
from .makeNode import makeNode
from .makeNodes import makeNodes
from .makeParams import makeParams
from .opinionQuery import opinionQuery
from .recordActivity import recordActivity
from .runFpc import runFpc
from .sampleQuorum import sampleQuorum
from .votingWeight import votingWeight
