#!/usr/bin/env python3

# Import sub-functions ...
from .createDid import createDid
from .didFromPublicKey import didFromPublicKey
from .makeBid import makeBid
from .makeRegistry import makeRegistry
from .makeTag import makeTag
from .openChannel import openChannel
from .parseDid import parseDid
from .registerDid import registerDid
from .runContract import runContract
from .serializeDid import serializeDid
from .signRec import signRec
from .tokenRequest import tokenRequest
from .verifyRec import verifyRec
from .verifyTag import verifyTag
