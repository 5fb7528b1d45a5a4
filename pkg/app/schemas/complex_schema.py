"""ComplexFile schema for the JSON interchange format."""

from pydantic import BaseModel, ConfigDict, StrictInt, StrictStr, field_validator


def _check_id(value: str) -> str:
    if not value:
        raise ValueError("generator ids must be nonempty")
    if not value.isascii():
        raise ValueError(f"generator id {value!r} is not ASCII")
    return value


class GeneratorEntry(BaseModel):
    """One generator: id, Alexander level a, homological degree m."""

    model_config = ConfigDict(extra="forbid")

    id: StrictStr
    a: StrictInt
    m: StrictInt

    @field_validator("id")
    @classmethod
    def _valid_id(cls, value: str) -> str:
        return _check_id(value)


class ComplexFile(BaseModel):
    """
    A complex as stored on disk.

    Unknown fields are rejected; ids are nonempty ASCII. Passing this schema
    does not imply the complex invariants hold.
    """

    model_config = ConfigDict(extra="forbid")

    name: StrictStr
    generators: list[GeneratorEntry]
    differential: dict[StrictStr, list[StrictStr]]
    duality: dict[StrictStr, StrictStr]

    @field_validator("differential")
    @classmethod
    def _differential_ids(cls, value: dict[str, list[str]]) -> dict[str, list[str]]:
        for source, targets in value.items():
            _check_id(source)
            for target in targets:
                _check_id(target)
        return value

    @field_validator("duality")
    @classmethod
    def _duality_ids(cls, value: dict[str, str]) -> dict[str, str]:
        for source, target in value.items():
            _check_id(source)
            _check_id(target)
        return value
