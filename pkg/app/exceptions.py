"""Domain exceptions carrying structured detail and CLI exit codes."""

from typing import Any


class DomainError(Exception):
    """Base error for every failure the CLI reports as a structured value."""

    code: str = "domain_error"
    exit_code: int = 1

    def __init__(self, detail: str, **context: Any):
        super().__init__(detail)
        self.detail = detail
        self.context = context

    def to_dict(self) -> dict[str, Any]:
        """Structured form embedded in error reports."""
        payload: dict[str, Any] = {"code": self.code, "detail": self.detail}
        if self.context:
            payload["context"] = self.context
        return payload


class UsageError(DomainError):
    """Malformed command line."""

    code = "usage_error"
    exit_code = 2


# Linear algebra


class CompositionNonzero(DomainError):
    """Two composable maps were expected to compose to zero."""

    code = "composition_nonzero"


class NotInvariant(DomainError):
    """A map does not land in the required subspace."""

    code = "not_invariant"


# Complexes


class EmptyComplex(DomainError):
    code = "empty_complex"


class NotRankOne(DomainError):
    """Total homology rank differs from 1, so the ambient space is no L-space."""

    code = "not_rank_one"


# Surgery


class InvalidParameter(DomainError):
    code = "invalid_parameter"


class OutOfRange(DomainError):
    code = "out_of_range"


class CriterionMismatch(DomainError):
    """Rank equality and Υ-vanishing disagreed; this is an implementation bug."""

    code = "criterion_mismatch"


class SurgeryInvariantError(DomainError):
    """A runtime-asserted property of the surgery complexes failed."""

    code = "surgery_invariant"


# Classification


class NotNormalizable(DomainError):
    code = "not_normalizable"


class SuiteFailure(DomainError):
    """A verification suite found a counterexample."""

    code = "suite_failure"


# Files


class ParseError(DomainError):
    code = "parse_error"


class SchemaError(DomainError):
    code = "schema_error"


class ValidationError(DomainError):
    """The complex parsed but violates the complex invariants."""

    code = "validation_error"

    def __init__(self, detail: str, violations: list[dict[str, Any]]):
        super().__init__(detail, violations=violations)
        self.violations = violations
