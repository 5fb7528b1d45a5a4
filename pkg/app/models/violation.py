"""Violation model for complexes that fail validation."""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict


class ViolationCode(StrEnum):
    DUPLICATE_ID = "duplicate_id"
    UNKNOWN_GENERATOR = "unknown_generator"
    MISSING_DUALITY = "missing_duality"
    LEVEL_PRESERVING = "level_preserving"
    LEVEL_DECREASING = "level_decreasing"
    DEGREE_MISMATCH = "degree_mismatch"
    D_SQUARED_NONZERO = "d_squared_nonzero"
    DUALITY_NOT_INVOLUTION = "duality_not_involution"
    DUALITY_LEVEL = "duality_level"
    DUALITY_DEGREE = "duality_degree"


class Violation(BaseModel):
    """One broken invariant, naming the generators involved."""

    model_config = ConfigDict(frozen=True)

    code: ViolationCode
    generators: tuple[str, ...]
    message: str
