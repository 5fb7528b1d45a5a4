"""Models package."""

from .cone import (
    ConeComplex,
    EpsilonMap,
    GluedComplex,
    LargeSurgeryRanks,
    Slot,
    SlotGenerator,
    UpsilonMap,
)
from .generator import Generator
from .knot_complex import KnotComplex
from .rank_report import RankIndex, RankReport
from .slice_complex import SliceComplex, SliceKind
from .staircase import AlexanderPoly, NotStaircase, StaircaseSpec
from .violation import Violation, ViolationCode

__all__ = [
    "AlexanderPoly",
    "ConeComplex",
    "EpsilonMap",
    "Generator",
    "GluedComplex",
    "KnotComplex",
    "LargeSurgeryRanks",
    "NotStaircase",
    "RankIndex",
    "RankReport",
    "SliceComplex",
    "SliceKind",
    "Slot",
    "SlotGenerator",
    "StaircaseSpec",
    "UpsilonMap",
    "Violation",
    "ViolationCode",
]
