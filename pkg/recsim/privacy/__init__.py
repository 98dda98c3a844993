#!/usr/bin/env python3

# Import sub-functions ...
from .anonymityMetrics import anonymityMetrics
from .classify import classify
from .exportPublicView import exportPublicView
from .makeAccountGraph import makeAccountGraph
from .makeActivityStats import makeActivityStats
from .newAccount import newAccount
from .publicView import publicView
from .recordVolume import recordVolume
from .registerPrincipal import registerPrincipal
from .routeTransaction import routeTransaction
from .tombstoneAccount import tombstoneAccount
