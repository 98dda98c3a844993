#!/usr/bin/env python3

# Import sub-functions ...
from .greenMultiplier import greenMultiplier
from .makeCostModel import makeCostModel
from .referenceTimes import referenceTimes
from .scaleFactor import scaleFactor
from .txEnergy import txEnergy
from .txTime import txTime
from .verificationDistribution import verificationDistribution
