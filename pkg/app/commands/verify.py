"""Verification command."""

import argparse

from pydantic import BaseModel

from app.commands import int_list, non_negative_int, positive_int
from app.services.verification_service import (
    InstanceSource,
    SuiteName,
    SuiteParams,
    SuiteReport,
    run_suite,
)
from config import settings

ALL_SUITES = "all"


class SuiteReports(BaseModel):
    suites: list[SuiteReport]


def verify(args: argparse.Namespace) -> BaseModel:
    """Run one suite, or every suite in declaration order."""
    source = InstanceSource(args.source)
    if args.random and source is InstanceSource.STAIRCASES:
        source = InstanceSource.BOTH
    params = SuiteParams(
        max_genus=args.max_genus,
        max_n=args.max_n,
        source=source,
        random_count=args.random,
        seed=args.seed,
        dim_bound=args.dim_bound,
        d_tops=args.d_tops,
        timings=args.timings,
    )
    if args.suite == ALL_SUITES:
        return SuiteReports(suites=[run_suite(suite, params) for suite in SuiteName])
    return run_suite(SuiteName(args.suite), params)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="run a verification suite")
    parser.add_argument(
        "--suite", required=True, choices=[*(s.value for s in SuiteName), ALL_SUITES]
    )
    parser.add_argument(
        "--max-genus", type=non_negative_int, default=settings.SUITE_MAX_GENUS
    )
    parser.add_argument("--max-n", type=positive_int, default=settings.SUITE_MAX_N)
    parser.add_argument(
        "--source",
        choices=[s.value for s in InstanceSource],
        default=InstanceSource.STAIRCASES.value,
    )
    parser.add_argument(
        "--random", type=non_negative_int, default=0, help="number of random complexes"
    )
    parser.add_argument("--seed", type=int, default=settings.SUITE_RANDOM_SEED)
    parser.add_argument(
        "--dim-bound", type=positive_int, default=settings.SUITE_RANDOM_DIM_BOUND
    )
    parser.add_argument("--d-tops", type=int_list, default=(settings.SUITE_DTOP,))
    parser.add_argument("--timings", action="store_true", help="include runtimes")
    parser.set_defaults(handler=verify)
