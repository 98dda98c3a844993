#!/usr/bin/env python3

# Import sub-functions ...
from .cli import cli
from .compareConsensus import compareConsensus
from .defaultConfig import defaultConfig
from .loadConfig import loadConfig
from .loadDemandCsv import loadDemandCsv
from .loadGenerationCsv import loadGenerationCsv
from .plotData import plotData
from .privacyDemo import privacyDemo
from .runScenario import runScenario
from .writeRows import writeRows
