"""Knot complex model."""

from typing import Any

from pydantic import BaseModel, ConfigDict, PrivateAttr, model_validator

from app.models.generator import Generator


class KnotComplex(BaseModel):
    """
    A finite filtered, graded complex over GF(2) with a duality involution.

    Generators are kept in canonical order (level, degree, id) and the
    differential omits generators whose boundary is empty, so two complexes
    built from the same data compare equal. The model stores data only;
    invariant checks live in ``ComplexService.validate``.
    """

    model_config = ConfigDict(frozen=True)

    name: str = "complex"
    generators: tuple[Generator, ...] = ()
    d: dict[str, frozenset[str]] = {}
    xi: dict[str, str] = {}

    _index: dict[str, int] = PrivateAttr(default_factory=dict)
    _by_id: dict[str, Generator] = PrivateAttr(default_factory=dict)

    @model_validator(mode="before")
    @classmethod
    def _canonicalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        generators = [
            g if isinstance(g, Generator) else Generator.model_validate(g)
            for g in data.get("generators", ())
        ]
        data["generators"] = tuple(sorted(generators, key=lambda g: g.sort_key))
        data["d"] = {
            source: frozenset(targets)
            for source, targets in dict(data.get("d", {})).items()
            if targets
        }
        return data

    def model_post_init(self, __context: Any) -> None:
        self._index = {g.id: i for i, g in enumerate(self.generators)}
        self._by_id = {g.id: g for g in self.generators}

    @property
    def dimension(self) -> int:
        return len(self.generators)

    @property
    def ids(self) -> list[str]:
        return [g.id for g in self.generators]

    def index(self, generator_id: str) -> int:
        """Position of a generator in canonical order."""
        return self._index[generator_id]

    def get(self, generator_id: str) -> Generator:
        return self._by_id[generator_id]

    def boundary(self, generator_id: str) -> frozenset[str]:
        return self.d.get(generator_id, frozenset())

    def dual(self, generator: Generator) -> Generator:
        return self._by_id[self.xi[generator.id]]
