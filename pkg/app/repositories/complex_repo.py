"""Complex repository for reading and writing complex files."""

import json
import logging
from pathlib import Path

from pydantic import ValidationError as PydanticValidationError

from app.exceptions import ParseError, SchemaError
from app.models.generator import Generator
from app.models.knot_complex import KnotComplex
from app.schemas.complex_schema import ComplexFile, GeneratorEntry
from app.services.complex_service import ComplexService
from app.utils.digest import content_digest

logger = logging.getLogger(__name__)


class ComplexRepository:
    """Repository for ComplexFile documents on disk."""

    def parse(self, data: bytes) -> KnotComplex:
        """
        Parse and validate a complex file.

        Args:
            data: Raw file bytes (UTF-8 JSON)

        Returns:
            The validated complex in canonical order

        Raises:
            ParseError: if the bytes are not UTF-8 JSON
            SchemaError: if fields are missing, unknown or mistyped
            ValidationError: if the complex breaks an invariant
        """
        try:
            document = json.loads(data.decode("utf-8"))
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc.reason}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"malformed JSON: {exc.msg}", line=exc.lineno, column=exc.colno
            ) from exc

        try:
            file = ComplexFile.model_validate(document)
        except PydanticValidationError as exc:
            errors = [
                {"loc": [str(part) for part in err["loc"]], "msg": err["msg"]}
                for err in exc.errors()
            ]
            raise SchemaError(
                "document does not match the complex schema", errors=errors
            ) from exc

        knot = self.to_model(file)
        ComplexService.ensure_valid(knot)
        logger.debug("parsed %s with %d generators", knot.name, knot.dimension)
        return knot

    def to_model(self, file: ComplexFile) -> KnotComplex:
        """Convert a schema instance to a complex without checking invariants."""
        return KnotComplex(
            name=file.name,
            generators=[Generator(id=g.id, a=g.a, m=g.m) for g in file.generators],
            d=file.differential,
            xi=file.duality,
        )

    def serialize(self, knot: KnotComplex) -> ComplexFile:
        """ComplexFile for a complex, with every list in canonical order."""
        return ComplexFile(
            name=knot.name,
            generators=[GeneratorEntry(id=g.id, a=g.a, m=g.m) for g in knot.generators],
            differential={
                gid: sorted(knot.d[gid], key=knot.index)
                for gid in knot.ids
                if gid in knot.d
            },
            duality={gid: knot.xi[gid] for gid in knot.ids if gid in knot.xi},
        )

    def dumps(self, knot: KnotComplex) -> str:
        return json.dumps(self.serialize(knot).model_dump(mode="json"), indent=2) + "\n"

    def load(self, path: str | Path) -> tuple[KnotComplex, str]:
        """
        Read, parse and validate a complex file.

        Returns:
            The complex and the digest of the raw bytes

        Raises:
            ParseError: if the file cannot be read or parsed
        """
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise ParseError(
                f"cannot read {path}: {exc.strerror}", path=str(path)
            ) from exc
        return self.parse(data), content_digest(data)

    def save(self, knot: KnotComplex, path: str | Path) -> Path:
        """
        Write a complex file.

        Raises:
            ParseError: if the file cannot be written
        """
        target = Path(path)
        try:
            target.write_text(self.dumps(knot), encoding="utf-8")
        except OSError as exc:
            raise ParseError(
                f"cannot write {target}: {exc.strerror}", path=str(target)
            ) from exc
        logger.debug("saved %s to %s", knot.name, target)
        return target
