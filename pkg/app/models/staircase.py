"""Staircase parameter and Alexander polynomial models."""

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class StaircaseSpec(BaseModel):
    """
    Parameters of a staircase complex.

    ``steps`` is the strictly increasing sequence 1 ≤ n_1 < … < n_k = g,
    ``d_top`` the degree of the generator at the top level g.
    """

    model_config = ConfigDict(frozen=True)

    steps: tuple[int, ...] = ()
    d_top: int = 0

    @field_validator("steps")
    @classmethod
    def _strictly_increasing(cls, steps: tuple[int, ...]) -> tuple[int, ...]:
        if steps and steps[0] < 1:
            raise ValueError(f"steps must start at 1 or above, got {steps[0]}")
        for lower, upper in zip(steps, steps[1:], strict=False):
            if upper <= lower:
                raise ValueError(
                    f"steps must be strictly increasing, got {list(steps)}"
                )
        return steps

    @property
    def k(self) -> int:
        return len(self.steps)

    @property
    def genus(self) -> int:
        return self.steps[-1] if self.steps else 0

    def levels(self) -> dict[int, int]:
        """Index i ∈ [−k, k] to level n_i, with n_0 = 0 and n_{−i} = −n_i."""
        result = {0: 0}
        for i, step in enumerate(self.steps, start=1):
            result[i] = step
            result[-i] = -step
        return dict(sorted(result.items()))


class NotStaircase(BaseModel):
    """Why a complex was not recognized as a staircase."""

    model_config = ConfigDict(frozen=True)

    reason: str = Field(min_length=1)


class AlexanderPoly(BaseModel):
    """Symmetric Laurent polynomial as exponent → nonzero integer coefficient."""

    model_config = ConfigDict(frozen=True)

    coeffs: dict[int, int]

    @model_validator(mode="after")
    def _symmetric(self) -> "AlexanderPoly":
        for exponent, coeff in self.coeffs.items():
            if coeff == 0:
                raise ValueError(f"coefficient of t^{exponent} is zero")
            if self.coeffs.get(-exponent) != coeff:
                raise ValueError(
                    "Alexander polynomial must be symmetric under t ↔ t^-1"
                )
        return self

    def value_at_one(self) -> int:
        return sum(self.coeffs.values())
