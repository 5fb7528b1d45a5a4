"""Rank table model."""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, field_validator


class RankIndex(StrEnum):
    """What the keys of a rank table index."""

    LEVEL = "level"
    DEGREE = "degree"
    SPIN_C = "spin_c"


class RankReport(BaseModel):
    """Ranks keyed by level, degree or spin^c label, with their total."""

    model_config = ConfigDict(frozen=True)

    index: RankIndex
    ranks: dict[int, int]

    @field_validator("ranks")
    @classmethod
    def _non_negative(cls, ranks: dict[int, int]) -> dict[int, int]:
        negative = {k: v for k, v in ranks.items() if v < 0}
        if negative:
            raise ValueError(f"ranks must be non-negative, got {negative}")
        return dict(sorted(ranks.items()))

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    def __getitem__(self, key: int) -> int:
        return self.ranks.get(key, 0)
