"""Result payload schemas, one per command."""

from pydantic import BaseModel

from app.schemas.complex_schema import ComplexFile


class ValidateResult(BaseModel):
    name: str
    valid: bool
    generators: int


class HomologyResult(BaseModel):
    degrees: dict[int, int]
    total: int


class GenusResult(BaseModel):
    genus: int


class DInvariantResult(BaseModel):
    d_invariant: int


class RankTableResult(BaseModel):
    """Rank table of a surgery: by level for hfk, by Spin^c residue for hf."""

    n: int
    ranks: dict[int, int]
    total: int
    lspace: bool | None = None


class LargeSurgeryResult(BaseModel):
    cone_rank: int
    lower_rank: int
    shifted_cone_rank: int
    dual_rank: int


class EpsilonResult(BaseModel):
    s: int
    matrix: list[list[int]]
    source_rank: int
    target_rank: int
    vanishes: bool
    large_surgery: LargeSurgeryResult | None = None


class AlexanderResult(BaseModel):
    coeffs: dict[int, int]
    rendered: str


class StaircaseCheckResult(BaseModel):
    staircase: bool
    steps: list[int] | None = None
    d_top: int | None = None
    reason: str | None = None


class StaircaseMakeResult(BaseModel):
    complex: ComplexFile
    path: str | None = None
