"""Report schema for command output."""

import json
from typing import Any

from pydantic import BaseModel, ConfigDict


class ErrorBody(BaseModel):
    """Structured form of a DomainError."""

    code: str
    detail: str
    context: dict[str, Any] | None = None


class Report(BaseModel):
    """Everything a command prints to stdout; exactly one of result and error is set."""

    model_config = ConfigDict(extra="forbid")

    command: list[str]
    input_digest: str | None = None
    result: dict[str, Any] | None = None
    error: ErrorBody | None = None
    version: str

    def to_json(self) -> str:
        """Deterministic JSON text with sorted keys."""
        return json.dumps(
            self.model_dump(mode="json", exclude_none=True),
            sort_keys=True,
            indent=2,
            ensure_ascii=False,
        )
