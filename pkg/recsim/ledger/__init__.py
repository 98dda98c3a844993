#!/usr/bin/env python3

# Import sub-functions ...
from .appendBlock import appendBlock
from .checkRecord import checkRecord
from .exportLedger import exportLedger
from .makeBlock import makeBlock
from .makeLedger import makeLedger
from .makePool import makePool
from .makeRecord import makeRecord
from .packBlock import packBlock
from .peekBlock import peekBlock
from .recomputeTips import recomputeTips
from .replaceTransaction import replaceTransaction
from .selectTips import selectTips
from .slotTime import slotTime
from .submitTransaction import submitTransaction
from .topologicalOrder import topologicalOrder
from .verifyBlock import verifyBlock
