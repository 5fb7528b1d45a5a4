"""Generator model."""

from pydantic import BaseModel, ConfigDict, Field


class Generator(BaseModel):
    """A basis element of a knot complex with its level ``a`` and degree ``m``."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(min_length=1)
    a: int
    m: int

    @property
    def sort_key(self) -> tuple[int, int, str]:
        return (self.a, self.m, self.id)

    def __str__(self) -> str:
        return self.id
