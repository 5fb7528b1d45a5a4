"""Command-line entry point."""

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import NoReturn

from app.commands import (
    complex as complex_commands,
    staircase as staircase_commands,
    surgery as surgery_commands,
    verify as verify_commands,
)
from app.exceptions import DomainError, UsageError
from app.schemas.report_schema import ErrorBody, Report
from app.utils.digest import file_digest
from config import settings

logger = logging.getLogger(__name__)


class CommandParser(argparse.ArgumentParser):
    """Argument parser that raises UsageError instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message, usage=self.format_usage().strip())


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog="knotcone",
        description="Surgery formulas and staircase classification for knot complexes",
    )
    parser.add_argument("--version", action="version", version=settings.APP_VERSION)
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Register command groups
    complex_commands.register(subparsers)
    surgery_commands.register(subparsers)
    staircase_commands.register(subparsers)
    verify_commands.register(subparsers)
    return parser


def configure_logging() -> None:
    logging.basicConfig(
        level=settings.log_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one command and print its Report as JSON.

    Returns:
        0 on success, 1 on a domain error, 2 on a usage error
    """
    args_list = list(sys.argv[1:] if argv is None else argv)
    configure_logging()
    parser = build_parser()
    digest = None
    try:
        args = parser.parse_args(args_list)
        if getattr(args, "file", None) is not None:
            digest = file_digest(args.file)
        payload = args.handler(args)
    except SystemExit as exc:
        # --help and --version print and exit through argparse.
        return int(exc.code or 0)
    except DomainError as exc:
        report = Report(
            command=args_list,
            input_digest=digest,
            error=ErrorBody(**exc.to_dict()),
            version=settings.APP_VERSION,
        )
        print(report.to_json())
        return exc.exit_code
    except Exception as exc:
        logger.exception("unexpected failure")
        report = Report(
            command=args_list,
            input_digest=digest,
            error=ErrorBody(code="internal_error", detail=str(exc)),
            version=settings.APP_VERSION,
        )
        print(report.to_json())
        return 1

    report = Report(
        command=args_list,
        input_digest=digest,
        result=payload.model_dump(mode="json"),
        version=settings.APP_VERSION,
    )
    print(report.to_json())
    return 0


if __name__ == "__main__":
    sys.exit(main())
