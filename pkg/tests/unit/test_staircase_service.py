"""Unit tests for StaircaseService."""

import pytest

from app.exceptions import NotNormalizable
from app.models.generator import Generator
from app.models.knot_complex import KnotComplex
from app.models.staircase import AlexanderPoly, NotStaircase, StaircaseSpec
from app.services.complex_service import ComplexService
from app.services.staircase_service import StaircaseService


@pytest.fixture
def service() -> StaircaseService:
    return StaircaseService()


class TestDeltaSequence:
    """delta_sequence recursion."""

    def test_trefoil(self, service: StaircaseService) -> None:
        assert service.delta_sequence(StaircaseSpec(steps=(1,))) == {-1: 2, 0: 1, 1: 0}

    def test_steps_1_2(self, service: StaircaseService) -> None:
        deltas = service.delta_sequence(StaircaseSpec(steps=(1, 2)))
        assert deltas == {2: 0, 1: 1, 0: 2, -1: 3, -2: 4}

    def test_single_generator(self, service: StaircaseService) -> None:
        assert service.delta_sequence(StaircaseSpec(d_top=7)) == {0: 7}

    def test_duality_symmetry(self, service: StaircaseService) -> None:
        """Should place levels symmetrically around zero."""
        for spec in service.enumerate_staircases(4, (0, 3)):
            deltas = service.delta_sequence(spec)
            levels = spec.levels()
            for i in range(1, spec.k + 1):
                assert deltas[-i] == 2 * levels[i] + deltas[i]


class TestMakeStaircase:
    """make_staircase construction."""

    def test_trefoil(self, service: StaircaseService, trefoil: KnotComplex) -> None:
        made = service.make_staircase(StaircaseSpec(steps=(1,)))
        assert made.generators == trefoil.generators
        assert made.d == trefoil.d
        assert made.xi == trefoil.xi

    def test_steps_1_2_differential(self, staircase_12: KnotComplex) -> None:
        """Should run d from x_0 to x_1 and from x_-2 to x_-1."""
        assert staircase_12.dimension == 5
        assert staircase_12.d == {
            "x_0": frozenset({"x_1"}),
            "x_-2": frozenset({"x_-1"}),
        }

    def test_empty_steps_is_unknot(self, service: StaircaseService) -> None:
        made = service.make_staircase(StaircaseSpec())
        assert [(g.a, g.m) for g in made.generators] == [(0, 0)]
        assert made.d == {}

    def test_outputs_are_valid_rank_one(self, service: StaircaseService) -> None:
        """Should build valid complexes with one-dimensional homology."""
        for spec in service.enumerate_staircases(4, (0, 2)):
            complexes = ComplexService(service.make_staircase(spec))
            assert complexes.genus() == spec.genus
            assert complexes.homology_rank() == 1
            assert complexes.d_invariant() == spec.d_top


class TestRecognizeStaircase:
    """recognize_staircase."""

    def test_round_trip(self, service: StaircaseService) -> None:
        for spec in service.enumerate_staircases(4, (0, 1)):
            assert service.recognize_staircase(service.make_staircase(spec)) == spec

    def test_missing_differential(
        self, service: StaircaseService, trefoil: KnotComplex
    ) -> None:
        result = service.recognize_staircase(trefoil.model_copy(update={"d": {}}))
        assert result == NotStaircase(reason="homology rank 3 ≠ 1")

    def test_two_generators_at_level_zero(self, service: StaircaseService) -> None:
        """Should reject a complex with two generators at level zero."""
        knot = KnotComplex(
            generators=[Generator(id="p", a=0, m=0), Generator(id="q", a=0, m=0)],
            xi={"p": "p", "q": "q"},
        )
        result = service.recognize_staircase(knot)
        assert isinstance(result, NotStaircase)
        assert "level 0 carries 2 generators" in result.reason

    def test_missing_level_zero(self, service: StaircaseService) -> None:
        knot = KnotComplex(
            generators=[Generator(id="u", a=1, m=0), Generator(id="v", a=-1, m=2)],
            xi={"u": "v", "v": "u"},
        )
        assert service.recognize_staircase(knot) == NotStaircase(reason="level 0 is empty")

    def test_wrong_differential_pattern(
        self, service: StaircaseService, trefoil: KnotComplex
    ) -> None:
        """Should reject the right generators joined the wrong way."""
        knot = trefoil.model_copy(update={"d": {"x_0": frozenset({"x_1"})}})
        result = service.recognize_staircase(knot)
        assert isinstance(result, NotStaircase)
        assert "differential at level -1" in result.reason


class TestAlexander:
    """alexander and render."""

    def test_trefoil(self, service: StaircaseService, trefoil: KnotComplex) -> None:
        poly = service.alexander(trefoil)
        assert poly.coeffs == {1: 1, 0: -1, -1: 1}
        assert service.render(poly) == "t - 1 + t^-1"

    def test_steps_1_2(self, service: StaircaseService, staircase_12: KnotComplex) -> None:
        poly = service.alexander(staircase_12)
        assert poly.coeffs == {2: 1, 1: -1, 0: 1, -1: -1, -2: 1}
        assert service.render(poly) == "t^2 - t + 1 - t^-1 + t^-2"

    def test_unknot(self, service: StaircaseService, unknot: KnotComplex) -> None:
        assert service.alexander(unknot).coeffs == {0: 1}

    def test_sign_is_normalized(self, service: StaircaseService) -> None:
        """Should flip the sign so the coefficients sum to one."""
        knot = service.make_staircase(StaircaseSpec(steps=(1,), d_top=1))
        assert service.alexander(knot).value_at_one() == 1

    def test_zero_sum_is_not_normalizable(self, service: StaircaseService) -> None:
        """Should refuse to guess a sign when the coefficients sum to zero."""
        knot = KnotComplex(
            generators=[Generator(id="p", a=0, m=0), Generator(id="q", a=0, m=1)],
            xi={"p": "p", "q": "q"},
        )
        with pytest.raises(NotNormalizable):
            service.alexander(knot)

    def test_staircases_alternate(self, service: StaircaseService) -> None:
        for spec in service.enumerate_staircases(4, (0, 1)):
            poly = service.alexander(service.make_staircase(spec))
            assert service.is_alternating(poly)
            assert poly.value_at_one() == 1

    def test_render_general_coefficients(self, service: StaircaseService) -> None:
        poly = AlexanderPoly(coeffs={1: -2, 0: 5, -1: -2})
        assert service.render(poly) == "-2t + 5 - 2t^-1"


class TestEnumerateStaircases:
    """enumerate_staircases."""

    def test_genus_two(self, service: StaircaseService) -> None:
        specs = service.enumerate_staircases(2)
        assert [s.steps for s in specs] == [(), (1,), (1, 2), (2,)]

    def test_counts(self, service: StaircaseService) -> None:
        """Should enumerate every step sequence once per d_top."""
        assert len(service.enumerate_staircases(3, (0, 1))) == 16
