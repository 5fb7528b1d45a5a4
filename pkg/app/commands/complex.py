"""Commands on a single complex."""

import argparse

from pydantic import BaseModel

from app.commands import add_file_argument, load_complex
from app.schemas.result_schema import (
    AlexanderResult,
    DInvariantResult,
    GenusResult,
    HomologyResult,
    ValidateResult,
)
from app.services.complex_service import ComplexService
from app.services.staircase_service import StaircaseService


def validate(args: argparse.Namespace) -> BaseModel:
    """Parse and validate; invalid complexes fail with their violations."""
    knot = load_complex(args.file)
    return ValidateResult(name=knot.name, valid=True, generators=knot.dimension)


def homology(args: argparse.Namespace) -> BaseModel:
    report = ComplexService(load_complex(args.file)).homology()
    return HomologyResult(degrees=report.ranks, total=report.total)


def genus(args: argparse.Namespace) -> BaseModel:
    return GenusResult(genus=ComplexService(load_complex(args.file)).genus())


def d_invariant(args: argparse.Namespace) -> BaseModel:
    return DInvariantResult(
        d_invariant=ComplexService(load_complex(args.file)).d_invariant()
    )


def alexander(args: argparse.Namespace) -> BaseModel:
    service = StaircaseService()
    poly = service.alexander(load_complex(args.file))
    return AlexanderResult(coeffs=poly.coeffs, rendered=service.render(poly))


def register(subparsers: argparse._SubParsersAction) -> None:
    """Register validate, homology, genus, d-invariant and alexander."""
    for name, handler, help_text in (
        ("validate", validate, "check every complex invariant"),
        ("homology", homology, "homology ranks by degree"),
        ("genus", genus, "largest occupied level"),
        ("d-invariant", d_invariant, "degree of the unique homology class"),
        ("alexander", alexander, "normalized graded Euler characteristic"),
    ):
        parser = subparsers.add_parser(name, help=help_text)
        add_file_argument(parser)
        parser.set_defaults(handler=handler)
