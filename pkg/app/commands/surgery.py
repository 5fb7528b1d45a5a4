"""Surgery commands."""

import argparse

from pydantic import BaseModel

from app.commands import add_file_argument, load_complex, positive_int
from app.schemas.result_schema import EpsilonResult, LargeSurgeryResult, RankTableResult
from app.services.surgery_service import SurgeryService


def hfk(args: argparse.Namespace) -> BaseModel:
    """Knot Floer ranks of the surgered knot by level."""
    report = SurgeryService(load_complex(args.file)).hfk_ranks(args.n)
    return RankTableResult(n=args.n, ranks=report.ranks, total=report.total)


def hf(args: argparse.Namespace) -> BaseModel:
    """Ranks of the surgered manifold by Spin^c residue."""
    service = SurgeryService(load_complex(args.file))
    report = service.hf_ranks(args.n)
    return RankTableResult(
        n=args.n,
        ranks=report.ranks,
        total=report.total,
        lspace=service.is_lspace(args.n),
    )


def simple(args: argparse.Namespace) -> BaseModel:
    return SurgeryService(load_complex(args.file)).is_simple(args.n)


def epsilon(args: argparse.Namespace) -> BaseModel:
    result = SurgeryService(load_complex(args.file)).epsilon(args.s, n=args.n)
    large = None
    if result.large_surgery is not None:
        ranks = result.large_surgery.model_dump(exclude={"n", "s"})
        large = LargeSurgeryResult(**ranks)
    return EpsilonResult(
        s=result.s,
        matrix=result.matrix.to_lists(),
        source_rank=result.source_rank,
        target_rank=result.target_rank,
        vanishes=result.vanishes,
        large_surgery=large,
    )


def register(subparsers: argparse._SubParsersAction) -> None:
    """Register hfk, hf, simple and epsilon."""
    for name, handler, help_text in (
        ("hfk", hfk, "knot Floer ranks of the surgered knot, by level"),
        ("hf", hf, "ranks of the surgered manifold, by Spin^c class"),
        ("simple", simple, "decide simplicity by both criteria"),
    ):
        parser = subparsers.add_parser(name, help=help_text)
        parser.add_argument("--n", type=positive_int, required=True)
        add_file_argument(parser)
        parser.set_defaults(handler=handler)

    parser = subparsers.add_parser("epsilon", help="the large-surgery map at level s")
    parser.add_argument("--s", type=int, required=True)
    parser.add_argument(
        "--n", type=positive_int, default=None, help="also check large surgery at n"
    )
    add_file_argument(parser)
    parser.set_defaults(handler=epsilon)
