"""Shared test fixtures and configuration."""

import json
from collections.abc import Callable
from pathlib import Path

import pytest

from app.models.generator import Generator
from app.models.knot_complex import KnotComplex
from app.models.staircase import StaircaseSpec
from app.services.staircase_service import StaircaseService
from main import main

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture(name="fixtures_dir")
def fixtures_dir_fixture() -> Path:
    """Directory holding the JSON complex files."""
    return FIXTURES_DIR


@pytest.fixture
def unknot() -> KnotComplex:
    """One generator at level 0, degree 0."""
    return KnotComplex(
        name="unknot",
        generators=[Generator(id="x", a=0, m=0)],
        d={},
        xi={"x": "x"},
    )


@pytest.fixture
def trefoil() -> KnotComplex:
    """Staircase with steps (1): levels −1, 0, 1 and d(x_−1) = x_0."""
    return KnotComplex(
        name="trefoil",
        generators=[
            Generator(id="x_-1", a=-1, m=2),
            Generator(id="x_0", a=0, m=1),
            Generator(id="x_1", a=1, m=0),
        ],
        d={"x_-1": {"x_0"}},
        xi={"x_-1": "x_1", "x_0": "x_0", "x_1": "x_-1"},
    )


@pytest.fixture
def staircase_12() -> KnotComplex:
    """Staircase with steps (1, 2) and top degree 0."""
    return StaircaseService().make_staircase(StaircaseSpec(steps=(1, 2)))


@pytest.fixture(name="run_cli")
def run_cli_fixture(capsys: pytest.CaptureFixture[str]) -> Callable[..., tuple[int, dict]]:
    """Run the command line in-process and decode the JSON report it prints.

    Paths of fixture files can be given by their bare file name.
    """

    def run(*argv: str) -> tuple[int, dict]:
        resolved = [
            str(FIXTURES_DIR / arg) if (FIXTURES_DIR / arg).is_file() else arg
            for arg in argv
        ]
        code = main(resolved)
        out = capsys.readouterr().out
        return code, json.loads(out)

    return run
