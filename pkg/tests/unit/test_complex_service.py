"""Unit tests for ComplexService."""

import pytest

from app.exceptions import EmptyComplex, NotRankOne, ValidationError
from app.models.generator import Generator
from app.models.knot_complex import KnotComplex
from app.models.slice_complex import SliceKind
from app.models.staircase import StaircaseSpec
from app.models.violation import ViolationCode
from app.services.complex_service import ComplexService
from app.services.staircase_service import StaircaseService
from app.utils.sampling import random_symmetric_complex


def flat_complex() -> KnotComplex:
    """Three levels, all in degree 0, which breaks the duality grading law."""
    return KnotComplex(
        generators=[
            Generator(id="x_-1", a=-1, m=0),
            Generator(id="x_0", a=0, m=0),
            Generator(id="x_1", a=1, m=0),
        ],
        xi={"x_-1": "x_1", "x_0": "x_0", "x_1": "x_-1"},
    )


class TestValidate:
    """ComplexService.validate and ensure_valid."""

    def test_unknot_is_valid(self, unknot: KnotComplex) -> None:
        assert ComplexService.validate(unknot) == []

    def test_trefoil_is_valid(self, trefoil: KnotComplex) -> None:
        assert ComplexService.validate(trefoil) == []

    def test_grading_law_violation_names_generator(self) -> None:
        violations = ComplexService.validate(flat_complex())
        assert {v.code for v in violations} == {ViolationCode.DUALITY_DEGREE}
        messages = [v.message for v in violations]
        assert "m(xi(x_1)) must be m(x_1)+2·1=2, found 0" in messages
        assert all(v.generators for v in violations)

    def test_constructor_rejects_invalid_complex(self) -> None:
        """Should raise with every violation attached."""
        with pytest.raises(ValidationError) as exc_info:
            ComplexService(flat_complex())
        assert len(exc_info.value.violations) == 2

    def test_missing_duality(self) -> None:
        knot = KnotComplex(generators=[Generator(id="x", a=0, m=0)])
        violations = ComplexService.validate(knot)
        assert [v.code for v in violations] == [ViolationCode.MISSING_DUALITY]
        assert violations[0].generators == ("x",)

    def test_duplicate_ids(self) -> None:
        knot = KnotComplex(
            generators=[Generator(id="x", a=0, m=0), Generator(id="x", a=0, m=0)],
            xi={"x": "x"},
        )
        codes = {v.code for v in ComplexService.validate(knot)}
        assert ViolationCode.DUPLICATE_ID in codes

    def test_unknown_id_does_not_hide_d_squared(self, trefoil: KnotComplex) -> None:
        """Should report d∘d ≠ 0 alongside a dangling differential target."""
        knot = trefoil.model_copy(
            update={
                "d": {
                    "x_-1": frozenset({"x_0"}),
                    "x_0": frozenset({"x_1"}),
                    "x_1": frozenset({"ghost"}),
                }
            }
        )
        violations = ComplexService.validate(knot)
        assert {v.code for v in violations} == {
            ViolationCode.UNKNOWN_GENERATOR,
            ViolationCode.D_SQUARED_NONZERO,
        }
        squared = [v for v in violations if v.code is ViolationCode.D_SQUARED_NONZERO]
        assert [v.generators for v in squared] == [("x_-1", "x_1")]


class TestSlice:
    """ComplexService.slice."""

    def test_ge_top_level(self, trefoil: KnotComplex) -> None:
        piece = ComplexService(trefoil).slice(SliceKind.GE, 1)
        assert [g.id for g in piece.generators] == ["x_1"]
        assert piece.d.is_zero()

    def test_lt_keeps_differential(self, trefoil: KnotComplex) -> None:
        """Should restrict the differential to the sub-level slice."""
        piece = ComplexService(trefoil).slice(SliceKind.LT, 1)
        assert [g.id for g in piece.generators] == ["x_-1", "x_0"]
        assert piece.d.to_lists() == [[0, 0], [1, 0]]

    def test_above_genus_is_empty(self, trefoil: KnotComplex) -> None:
        """Should return an empty slice above the top level."""
        piece = ComplexService(trefoil).slice(SliceKind.GE, 2)
        assert piece.dim == 0
        assert piece.d.shape == (0, 0)

    def test_at_slices_have_zero_differential(self, staircase_12: KnotComplex) -> None:
        service = ComplexService(staircase_12)
        for s in range(-3, 4):
            assert service.slice(SliceKind.AT, s).d.is_zero()

    def test_label(self, trefoil: KnotComplex) -> None:
        service = ComplexService(trefoil)
        assert service.slice(SliceKind.LE, -1).label == "B{≤-1}"
        assert service.slice(SliceKind.AT, 0).label == "B{0}"


class TestHomology:
    """ComplexService.homology by degree."""

    def test_unknot(self, unknot: KnotComplex) -> None:
        report = ComplexService(unknot).homology()
        assert report.ranks == {0: 1}

    def test_trefoil_full(self, trefoil: KnotComplex) -> None:
        report = ComplexService(trefoil).homology()
        assert report[0] == 1
        assert report.total == 1

    def test_trefoil_lt_one_is_acyclic(self, trefoil: KnotComplex) -> None:
        """Should find no homology below the top level of the trefoil."""
        service = ComplexService(trefoil)
        report = service.homology(service.slice(SliceKind.LT, 1))
        assert report.total == 0

    def test_at_slice_homology_is_dimension(self, staircase_12: KnotComplex) -> None:
        service = ComplexService(staircase_12)
        for s in range(-2, 3):
            piece = service.slice(SliceKind.AT, s)
            assert service.homology(piece).total == piece.dim

    def test_bigraded_dims(self, trefoil: KnotComplex) -> None:
        assert ComplexService(trefoil).bigraded_dims() == {
            (-1, 2): 1,
            (0, 1): 1,
            (1, 0): 1,
        }


class TestGenusAndDInvariant:
    """genus and d_invariant."""

    def test_genus(self, unknot: KnotComplex, trefoil: KnotComplex) -> None:
        assert ComplexService(unknot).genus() == 0
        assert ComplexService(trefoil).genus() == 1

    def test_genus_of_steps_1_2(self, staircase_12: KnotComplex) -> None:
        assert ComplexService(staircase_12).genus() == 2

    def test_genus_of_empty_complex_raises(self) -> None:
        """Should refuse to compute the genus of an empty complex."""
        with pytest.raises(EmptyComplex):
            ComplexService(KnotComplex()).genus()

    def test_d_invariant(self, unknot: KnotComplex, trefoil: KnotComplex) -> None:
        assert ComplexService(unknot).d_invariant() == 0
        assert ComplexService(trefoil).d_invariant() == 0

    def test_d_invariant_is_top_degree(self) -> None:
        knot = StaircaseService().make_staircase(StaircaseSpec(steps=(1, 2), d_top=5))
        assert ComplexService(knot).d_invariant() == 5

    def test_d_invariant_requires_rank_one(self, trefoil: KnotComplex) -> None:
        """Should report the rank when homology is not one-dimensional."""
        knot = trefoil.model_copy(update={"d": {}})
        with pytest.raises(NotRankOne) as exc_info:
            ComplexService(knot).d_invariant()
        assert exc_info.value.context["rank"] == 3


class TestStructureMaps:
    """tau, q_map, p_map, iota, xi_map and r_map."""

    def test_tau(self, trefoil: KnotComplex, unknot: KnotComplex) -> None:
        assert ComplexService(trefoil).tau(1).shape == (1, 0)
        assert ComplexService(trefoil).tau(0).to_lists() == [[1]]
        assert ComplexService(unknot).tau(0).shape == (1, 0)

    def test_q_map(self, trefoil: KnotComplex) -> None:
        service = ComplexService(trefoil)
        assert service.q_map(-1).to_lists() == [[1]]
        assert service.q_map(0).shape == (0, 1)

    def test_iota(self, trefoil: KnotComplex) -> None:
        assert ComplexService(trefoil).iota(1).to_lists() == [[1]]

    def test_p_map(self, trefoil: KnotComplex) -> None:
        service = ComplexService(trefoil)
        assert service.p_map(-1).to_lists() == [[1], [0]]
        assert service.p_map(0).shape == (1, 0)

    def test_xi_and_r(self, trefoil: KnotComplex) -> None:
        service = ComplexService(trefoil)
        assert service.xi_map(1).to_lists() == [[1]]
        assert service.r_map(-1).to_lists() == [[1], [0]]


class TestComplexProperties:
    """Properties every valid complex satisfies."""

    @pytest.fixture
    def samples(self, staircase_12: KnotComplex) -> list[KnotComplex]:
        randoms = [random_symmetric_complex(3, 9, seed) for seed in range(20)]
        return [staircase_12, *randoms]

    def test_mapping_cone_rank_matches_homology(self, samples) -> None:
        """Should keep the mapping cone of p_s at the rank of H(B)."""
        for knot in samples:
            service = ComplexService(knot)
            g = service.genus()
            for s in range(-g - 1, g + 2):
                assert service.mapping_cone_rank(s) == service.homology_rank()

    def test_duality_rank_symmetry(self, samples) -> None:
        """Should match bigraded ranks under the duality law."""
        for knot in samples:
            dims = ComplexService(knot).bigraded_dims()
            for (s, m), dim in dims.items():
                assert dims.get((-s, m + 2 * s)) == dim

    def test_genus_is_minus_lowest_level(self, samples) -> None:
        for knot in samples:
            assert ComplexService(knot).genus() == -min(g.a for g in knot.generators)

    def test_level_filtration_rank_bound(self, samples) -> None:
        for knot in samples:
            service = ComplexService(knot)
            for s in range(-3, 4):
                difference = service.homology_rank(
                    SliceKind.GE, s
                ) - service.homology_rank(SliceKind.GT, s)
                assert difference <= service.slice(SliceKind.AT, s).dim
