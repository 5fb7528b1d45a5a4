"""Slices of a knot complex by level."""

from dataclasses import dataclass
from enum import StrEnum

from app.models.generator import Generator
from app.utils.gf2 import BitMatrix


class SliceKind(StrEnum):
    """Which generators a slice keeps, relative to a level ``s``."""

    ALL = "all"
    GE = "ge"
    GT = "gt"
    LE = "le"
    LT = "lt"
    AT = "at"

    def keeps(self, a: int, s: int) -> bool:
        match self:
            case SliceKind.ALL:
                return True
            case SliceKind.GE:
                return a >= s
            case SliceKind.GT:
                return a > s
            case SliceKind.LE:
                return a <= s
            case SliceKind.LT:
                return a < s
            case SliceKind.AT:
                return a == s

    @property
    def symbol(self) -> str:
        return {
            SliceKind.ALL: "",
            SliceKind.GE: "≥",
            SliceKind.GT: ">",
            SliceKind.LE: "≤",
            SliceKind.LT: "<",
            SliceKind.AT: "",
        }[self]


@dataclass(frozen=True, eq=False)
class SliceComplex:
    """
    Generators kept by a slice together with the induced differential.

    GE/GT slices are subcomplexes and LE/LT/AT slices are quotient
    complexes; in both cases ``d`` is the block of the full differential on
    the kept generators, which is again a differential.
    """

    kind: SliceKind
    level: int
    generators: tuple[Generator, ...]
    d: BitMatrix

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def label(self) -> str:
        if self.kind is SliceKind.ALL:
            return "B"
        if self.kind is SliceKind.AT:
            return f"B{{{self.level}}}"
        return f"B{{{self.kind.symbol}{self.level}}}"
