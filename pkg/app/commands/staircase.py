"""Staircase commands."""

import argparse
from pathlib import Path

from pydantic import BaseModel, ValidationError

from app.commands import add_file_argument, int_list, load_complex
from app.exceptions import InvalidParameter
from app.models.staircase import StaircaseSpec
from app.repositories.complex_repo import ComplexRepository
from app.schemas.result_schema import StaircaseCheckResult, StaircaseMakeResult
from app.services.staircase_service import StaircaseService
from config import settings


def make(args: argparse.Namespace) -> BaseModel:
    """Build a staircase complex, optionally writing it to a file."""
    try:
        spec = StaircaseSpec(steps=args.steps, d_top=args.d)
    except ValidationError as exc:
        raise InvalidParameter(
            "steps must be strictly increasing integers from 1",
            steps=list(args.steps),
        ) from exc
    knot = StaircaseService().make_staircase(spec)
    repository = ComplexRepository()
    path = str(repository.save(knot, args.output)) if args.output else None
    return StaircaseMakeResult(complex=repository.serialize(knot), path=path)


def check(args: argparse.Namespace) -> BaseModel:
    found = StaircaseService().recognize_staircase(load_complex(args.file))
    if isinstance(found, StaircaseSpec):
        return StaircaseCheckResult(
            staircase=True, steps=list(found.steps), d_top=found.d_top
        )
    return StaircaseCheckResult(staircase=False, reason=found.reason)


def register(subparsers: argparse._SubParsersAction) -> None:
    """Register the staircase group with make and check."""
    group = subparsers.add_parser("staircase", help="staircase normal forms")
    actions = group.add_subparsers(dest="action", required=True)

    parser = actions.add_parser("make", help="emit a staircase complex file")
    parser.add_argument("--steps", type=int_list, default=(), help="e.g. 1,2,3")
    parser.add_argument("--d", type=int, default=settings.SUITE_DTOP, help="top degree")
    parser.add_argument("--output", type=Path, default=None)
    parser.set_defaults(handler=make)

    parser = actions.add_parser("check", help="recognize a staircase")
    add_file_argument(parser)
    parser.set_defaults(handler=check)
