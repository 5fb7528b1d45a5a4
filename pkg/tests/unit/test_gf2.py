"""Unit tests for GF(2) linear algebra."""

import numpy as np
import pytest

from app.exceptions import CompositionNonzero, NotInvariant
from app.services.complex_service import ComplexService
from app.utils.gf2 import (
    BitMatrix,
    Subspace,
    homology_rank,
    image_basis,
    kernel_basis,
    rank,
    restrict_quotient,
    row_reduce,
)
from app.utils.sampling import random_symmetric_complex


def trefoil_differential() -> BitMatrix:
    # Basis x_-1, x_0, x_1 with d(x_-1) = x_0.
    return BitMatrix.from_entries(3, 3, [(1, 0)])


class TestBitMatrix:
    """BitMatrix construction and arithmetic."""

    def test_rejects_entries_other_than_bits(self) -> None:
        with pytest.raises(ValueError):
            BitMatrix(np.array([[0, 2]]))

    def test_index_out_of_range(self) -> None:
        m = BitMatrix.zeros(2, 3)
        with pytest.raises(IndexError):
            m[2, 0]
        with pytest.raises(IndexError):
            m[0, -1]

    def test_product_is_mod_two(self) -> None:
        """Should reduce matrix products modulo two."""
        m = BitMatrix.from_rows([[1, 1], [1, 1]])
        assert (m @ m).is_zero()

    def test_sum_is_xor(self) -> None:
        m = BitMatrix.identity(2)
        assert (m + m) == BitMatrix.zeros(2, 2)

    def test_bits_are_read_only(self) -> None:
        m = BitMatrix.identity(2)
        with pytest.raises(ValueError):
            m.bits[0, 0] = 0

    def test_empty_shapes_compose(self) -> None:
        """Should compose matrices with a zero-length side."""
        left = BitMatrix.zeros(2, 0)
        right = BitMatrix.zeros(0, 3)
        assert (left @ right) == BitMatrix.zeros(2, 3)

    def test_from_entries_repeats_cancel(self) -> None:
        m = BitMatrix.from_entries(1, 1, [(0, 0), (0, 0)])
        assert m.is_zero()


class TestRank:
    """rank over GF(2)."""

    def test_all_ones(self) -> None:
        assert rank(BitMatrix.from_rows([[1, 1], [1, 1]])) == 1

    def test_identity(self) -> None:
        assert rank(BitMatrix.identity(4)) == 4

    def test_zero_and_empty(self) -> None:
        assert rank(BitMatrix.zeros(3, 5)) == 0
        assert rank(BitMatrix.zeros(0, 0)) == 0

    def test_dependent_over_two_elements(self) -> None:
        """Should count rows dependent only over GF(2) once."""
        # Third row is the sum of the first two.
        m = BitMatrix.from_rows([[1, 0, 1], [0, 1, 1], [1, 1, 0]])
        assert rank(m) == 2


class TestKernelAndImage:
    """kernel_basis and image_basis."""

    def test_kernel_of_single_row(self) -> None:
        kernel = kernel_basis(BitMatrix.from_rows([[1, 1, 0]]))
        assert kernel.dim == 2
        assert kernel.pivots == (0, 2)
        assert kernel.basis.tolist() == [[1, 1, 0], [0, 0, 1]]

    def test_image_is_column_span(self) -> None:
        image = image_basis(BitMatrix.from_rows([[1, 0], [1, 0], [0, 1]]))
        assert image.basis.tolist() == [[1, 1, 0], [0, 0, 1]]

    def test_rank_nullity_on_random_matrices(self) -> None:
        """Should satisfy rank plus nullity equals column count."""
        rng = np.random.default_rng(7)
        for _ in range(25):
            rows, cols = rng.integers(0, 7, size=2)
            m = BitMatrix(rng.integers(0, 2, size=(rows, cols)))
            kernel = kernel_basis(m)
            assert kernel.dim + rank(m) == m.cols
            for v in kernel.basis:
                assert not m.apply(v).any()

    def test_image_dimension_is_rank(self) -> None:
        """Should give image_basis the dimension of the rank on random matrices."""
        rng = np.random.default_rng(11)
        for _ in range(25):
            rows, cols = rng.integers(0, 7, size=2)
            m = BitMatrix(rng.integers(0, 2, size=(rows, cols)))
            image = image_basis(m)
            assert image.dim == rank(m)
            for column in m.bits.T:
                assert image.contains(column)

    def test_echelon_form_is_idempotent(self) -> None:
        rng = np.random.default_rng(3)
        bits = rng.integers(0, 2, size=(5, 6))
        reduced, pivots = row_reduce(bits)
        again, again_pivots = row_reduce(reduced)
        assert np.array_equal(reduced, again)
        assert pivots == again_pivots


class TestSubspace:
    """Subspace canonical form and reduction."""

    def test_span_is_canonical(self) -> None:
        """Should give equal subspaces the same echelon basis."""
        a = Subspace.span(3, [[1, 1, 0], [0, 1, 1]])
        b = Subspace.span(3, [[1, 0, 1], [1, 1, 0]])
        assert a == b

    def test_rejects_non_echelon_basis(self) -> None:
        with pytest.raises(ValueError):
            Subspace(2, np.array([[1, 1], [0, 1]], dtype=np.uint8), (0, 1))

    def test_reduce_and_contains(self) -> None:
        space = Subspace.span(3, [[1, 1, 0]])
        assert space.contains(np.array([1, 1, 0]))
        assert not space.contains(np.array([1, 0, 0]))
        assert space.reduce(np.array([1, 0, 0])).tolist() == [0, 1, 0]

    def test_zero_dimensional_ambient(self) -> None:
        assert Subspace.full(0).dim == 0
        assert Subspace.zero(0) == Subspace.full(0)


class TestHomologyRank:
    """homology_rank of composable pairs."""

    def test_trefoil_differential(self) -> None:
        d = trefoil_differential()
        assert homology_rank(d, d) == 1

    def test_nonzero_composition_raises(self) -> None:
        # x0 -> x1 -> x2 squares to x0 -> x2.
        d = BitMatrix.from_entries(3, 3, [(1, 0), (2, 1)])
        with pytest.raises(CompositionNonzero):
            homology_rank(d, d)

    def test_trefoil_cone_n2_s1_is_acyclic(self) -> None:
        # Basis X:x_1, Z:x_-1, Z:x_0, Z:x_1 of C_2(1).
        d = BitMatrix.from_entries(4, 4, [(3, 0), (2, 1)])
        assert homology_rank(d, d) == 0

    def test_homology_plus_twice_rank_is_dimension(self) -> None:
        """Should satisfy dim = homology + 2·rank for every square-zero d."""
        for seed in range(20):
            d = ComplexService(random_symmetric_complex(3, 9, seed)).differential()
            assert homology_rank(d, d) + 2 * rank(d) == d.cols


class TestRestrictQuotient:
    """restrict_quotient onto canonical quotient bases."""

    def test_identity_modulo_diagonal(self) -> None:
        m = BitMatrix.identity(2)
        result = restrict_quotient(m, Subspace.full(2), Subspace.span(2, [[1, 1]]))
        assert result.to_lists() == [[1, 1]]

    def test_leaving_target_raises(self) -> None:
        """Should refuse a map whose image leaves the codomain."""
        m = BitMatrix.identity(2)
        with pytest.raises(NotInvariant):
            restrict_quotient(
                m, Subspace.full(2), Subspace.zero(2), codom=Subspace.span(2, [[1, 0]])
            )

    def test_empty_domain_gives_empty_columns(self) -> None:
        m = BitMatrix.zeros(2, 0)
        result = restrict_quotient(m, Subspace.full(0), Subspace.zero(2))
        assert result.shape == (2, 0)
