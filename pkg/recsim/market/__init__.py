#!/usr/bin/env python3

# Import sub-functions ...
from .askPrice import askPrice
from .bidCost import bidCost
from .certificateAudit import certificateAudit
from .chooseBid import chooseBid
from .desiredQuantity import desiredQuantity
from .generateRecs import generateRecs
from .greenRatio import greenRatio
from .listAsks import listAsks
from .makeClock import makeClock
from .makeConsumer import makeConsumer
from .makeMarket import makeMarket
from .makeOrder import makeOrder
from .makeSupplier import makeSupplier
from .matchOrders import matchOrders
from .matchOrdersExhaustive import matchOrdersExhaustive
from .penaltyFee import penaltyFee
from .remainingLifetime import remainingLifetime
from .retireExpired import retireExpired
from .settle import settle
from .updateBasePrice import updateBasePrice
from .urgency import urgency
