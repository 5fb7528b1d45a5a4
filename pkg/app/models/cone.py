"""Mapping-cone models for the surgery complexes."""

from dataclasses import dataclass, field
from enum import StrEnum
from typing import NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from app.models.generator import Generator
from app.utils.gf2 import BitMatrix


class Slot(StrEnum):
    """Summand of C_n(s): X = B{≥s}, Y = B{≥n+1−s}, Z = B."""

    X = "X"
    Y = "Y"
    Z = "Z"


class SlotGenerator(NamedTuple):
    slot: Slot
    generator: Generator

    @property
    def label(self) -> str:
        return f"{self.slot}:{self.generator.id}"


@dataclass(frozen=True, eq=False)
class ConeComplex:
    """The cone C_n(s) with basis ordered X block, then Y block, then Z block."""

    n: int
    s: int
    slots: tuple[SlotGenerator, ...]
    d: BitMatrix
    _positions: dict[tuple[Slot, str], int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        positions = {(sg.slot, sg.generator.id): i for i, sg in enumerate(self.slots)}
        object.__setattr__(self, "_positions", positions)

    @property
    def dim(self) -> int:
        return len(self.slots)

    @property
    def labels(self) -> list[str]:
        return [sg.label for sg in self.slots]

    def block(self, slot: Slot) -> list[int]:
        return [i for i, sg in enumerate(self.slots) if sg.slot is slot]

    def position(self, slot: Slot, generator_id: str) -> int | None:
        return self._positions.get((slot, generator_id))

    def describe(self, vector: np.ndarray) -> list[str]:
        """Labels of the basis elements in the support of a vector."""
        return [self.slots[i].label for i in np.flatnonzero(vector)]


@dataclass(frozen=True, eq=False)
class GluedComplex:
    """
    G_n[r]: the cones C_n(t), t ≡ r (mod n), joined by the maps Υ_t.

    ``blocks`` is ordered by increasing t and ``cross[t]`` is the chain-level
    Υ_t from block t into block t+n.
    """

    n: int
    residue: int
    blocks: dict[int, ConeComplex]
    cross: dict[int, BitMatrix]
    d: BitMatrix

    @property
    def dim(self) -> int:
        return self.d.rows

    def offset(self, t: int) -> int:
        start = 0
        for level, cone in self.blocks.items():
            if level == t:
                return start
            start += cone.dim
        raise KeyError(t)


@dataclass(frozen=True, eq=False)
class UpsilonMap:
    """Υ_s from C_n(s) to C_n(s+n) at chain level and on homology."""

    n: int
    s: int
    source: ConeComplex
    target: ConeComplex
    chain: BitMatrix
    induced: BitMatrix

    @property
    def vanishes(self) -> bool:
        return self.induced.is_zero()


class LargeSurgeryRanks(BaseModel):
    """The four ranks compared by the large-surgery identification."""

    model_config = ConfigDict(frozen=True)

    n: int
    s: int
    cone_rank: int
    lower_rank: int
    shifted_cone_rank: int
    dual_rank: int


@dataclass(frozen=True, eq=False)
class EpsilonMap:
    """ε_s = q_{−s} ∘ Ξ_s ∘ τ_s from H(B{<s}) to H(B{≤−s})."""

    s: int
    matrix: BitMatrix
    source_rank: int
    target_rank: int
    large_surgery: LargeSurgeryRanks | None = None

    @property
    def vanishes(self) -> bool:
        return self.matrix.is_zero()
