"""Command groups: each module registers its subcommands on the main parser."""

import argparse
from pathlib import Path

from app.models.knot_complex import KnotComplex
from app.repositories.complex_repo import ComplexRepository


def load_complex(path: Path) -> KnotComplex:
    """Parse and validate a complex file for a command."""
    knot, _ = ComplexRepository().load(path)
    return knot


def positive_int(text: str) -> int:
    """Argument type for surgery coefficients."""
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def int_list(text: str) -> tuple[int, ...]:
    """Comma-separated integers; the empty string is the empty list."""
    parts = [part.strip() for part in text.split(",") if part.strip()]
    try:
        return tuple(int(part) for part in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from exc


def add_file_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", type=Path, help="complex file (JSON)")
