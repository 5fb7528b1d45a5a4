"""Dense linear algebra over GF(2).

Matrices are numpy ``uint8`` arrays holding 0/1 entries; all arithmetic is
XOR/AND. Subspaces are always stored in reduced row-echelon form so two
subspaces are equal exactly when their bit patterns are equal.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from app.exceptions import CompositionNonzero, NotInvariant


def row_reduce(bits: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """
    Reduce a binary matrix to reduced row-echelon form.

    Args:
        bits: Binary matrix (m x n), values in {0, 1}

    Returns:
        (R, pivots): the nonzero rows of the reduced form and their pivot columns
    """
    mat = np.array(bits, dtype=np.uint8, copy=True) % 2
    n_rows, n_cols = mat.shape
    pivots: list[int] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        candidates = np.flatnonzero(mat[row:, col])
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        # Eliminate above and below so the pivot column is a unit vector.
        others = np.flatnonzero(mat[:, col])
        others = others[others != row]
        if others.size:
            mat[others] ^= mat[row]
        pivots.append(col)
        row += 1
    return mat[:row], tuple(pivots)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class BitMatrix:
    """Immutable dense matrix over GF(2); columns index the source basis."""

    bits: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.bits)
        if arr.ndim != 2:
            raise ValueError(f"BitMatrix needs a 2-d array, got shape {arr.shape}")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("BitMatrix entries must be exactly 0 or 1")
        object.__setattr__(self, "bits", _frozen(arr.astype(np.uint8, copy=True)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, size: int) -> BitMatrix:
        return cls(np.eye(size, dtype=np.uint8))

    @classmethod
    def from_rows(
        cls, rows: Iterable[Iterable[int]], cols: int | None = None
    ) -> BitMatrix:
        """Build from nested lists; ``cols`` is required when there are no rows."""
        data = [list(row) for row in rows]
        if not data:
            return cls.zeros(0, cols or 0)
        return cls(np.array(data, dtype=np.uint8))

    @classmethod
    def from_entries(
        cls, rows: int, cols: int, entries: Iterable[tuple[int, int]]
    ) -> BitMatrix:
        """Build from the positions of the nonzero entries (repeats cancel)."""
        arr = np.zeros((rows, cols), dtype=np.uint8)
        for r, c in entries:
            arr[r, c] ^= 1
        return cls(arr)

    @property
    def rows(self) -> int:
        return int(self.bits.shape[0])

    @property
    def cols(self) -> int:
        return int(self.bits.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> int:
        r, c = key
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(
                f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix"
            )
        return int(self.bits[r, c])

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot compose {self.shape} with {other.shape}")
        product = self.bits.astype(np.int64) @ other.bits.astype(np.int64)
        return BitMatrix((product & 1).astype(np.uint8))

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape}")
        return BitMatrix(self.bits ^ other.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.bits, other.bits))

    __hash__ = None  # type: ignore[assignment]

    def apply(self, vector: np.ndarray) -> np.ndarray:
        """Image of a single 0/1 vector."""
        product = self.bits.astype(np.int64) @ np.asarray(vector, dtype=np.int64)
        return (product & 1).astype(np.uint8)

    def is_zero(self) -> bool:
        return not self.bits.any()

    def to_lists(self) -> list[list[int]]:
        return self.bits.astype(int).tolist()


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of GF(2)^ambient_dim held by its reduced row-echelon basis."""

    ambient_dim: int
    basis: np.ndarray
    pivots: tuple[int, ...]

    def __post_init__(self) -> None:
        basis = np.asarray(self.basis, dtype=np.uint8)
        if basis.ndim != 2 or basis.shape[1] != self.ambient_dim:
            raise ValueError(
                f"Subspace basis of shape {basis.shape} does not live in dimension "
                f"{self.ambient_dim}"
            )
        reduced, pivots = row_reduce(basis)
        if reduced.shape != basis.shape or not np.array_equal(reduced, basis):
            raise ValueError("Subspace basis must be in reduced row-echelon form")
        if tuple(self.pivots) != pivots:
            raise ValueError("Subspace pivots do not match its basis")
        object.__setattr__(self, "basis", _frozen(basis.copy()))
        object.__setattr__(self, "pivots", pivots)

    @classmethod
    def span(
        cls, ambient_dim: int, vectors: Iterable[np.ndarray] | np.ndarray
    ) -> Subspace:
        """Canonical subspace spanned by the given vectors."""
        rows = [np.asarray(v, dtype=np.uint8).reshape(ambient_dim) for v in vectors]
        stacked = (
            np.vstack(rows) if rows else np.zeros((0, ambient_dim), dtype=np.uint8)
        )
        reduced, pivots = row_reduce(stacked)
        return cls(ambient_dim, reduced, pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, np.zeros((0, ambient_dim), dtype=np.uint8), ())

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(
            ambient_dim,
            np.eye(ambient_dim, dtype=np.uint8),
            tuple(range(ambient_dim)),
        )

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and bool(
            np.array_equal(self.basis, other.basis)
        )

    __hash__ = None  # type: ignore[assignment]

    def reduce(self, vector: np.ndarray) -> np.ndarray:
        """Representative of ``vector`` modulo this subspace, zero on every pivot."""
        vec = np.asarray(vector, dtype=np.uint8).reshape(self.ambient_dim).copy()
        if not self.pivots:
            return vec
        coeffs = vec[list(self.pivots)].astype(np.int64)
        vec ^= ((coeffs @ self.basis.astype(np.int64)) & 1).astype(np.uint8)
        return vec

    def contains(self, vector: np.ndarray) -> bool:
        return not self.reduce(vector).any()

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, vector: np.ndarray) -> np.ndarray:
        """Coordinates of a vector of this subspace in the echelon basis."""
        return np.asarray(vector, dtype=np.uint8)[list(self.pivots)].copy()

    def combination(self, coords: np.ndarray) -> np.ndarray:
        """Vector with the given echelon-basis coordinates."""
        coeffs = np.asarray(coords, dtype=np.int64).reshape(self.dim)
        return ((coeffs @ self.basis.astype(np.int64)) & 1).astype(np.uint8)


def rank(m: BitMatrix) -> int:
    """GF(2) rank of a matrix."""
    return len(row_reduce(m.bits)[1])


def kernel_basis(m: BitMatrix) -> Subspace:
    """Echelon basis of {v : m·v = 0}."""
    reduced, pivots = row_reduce(m.bits)
    pivot_set = set(pivots)
    vectors = []
    for free in (c for c in range(m.cols) if c not in pivot_set):
        vec = np.zeros(m.cols, dtype=np.uint8)
        vec[free] = 1
        for row, col in enumerate(pivots):
            if reduced[row, free]:
                vec[col] = 1
        vectors.append(vec)
    return Subspace.span(m.cols, vectors)


def image_basis(m: BitMatrix) -> Subspace:
    """Echelon basis of the column span."""
    return Subspace.span(m.rows, m.bits.T)


def homology_rank(d_out: BitMatrix, d_in: BitMatrix) -> int:
    """
    dim ker(d_out) - dim im(d_in) for a composable pair with d_out·d_in = 0.

    For a single differential pass the same matrix twice.

    Raises:
        CompositionNonzero: if d_out·d_in != 0
    """
    if d_out.cols != d_in.rows:
        raise ValueError(f"maps {d_in.shape} and {d_out.shape} are not composable")
    if not (d_out @ d_in).is_zero():
        raise CompositionNonzero(
            "the two maps do not compose to zero",
            shape_out=list(d_out.shape),
            shape_in=list(d_in.shape),
        )
    return (d_out.cols - rank(d_out)) - rank(d_in)


def restrict_quotient(
    m: BitMatrix,
    dom: Subspace,
    codom_mod: Subspace,
    codom: Subspace | None = None,
) -> BitMatrix:
    """
    Matrix of the map induced by ``m`` from ``dom`` to ``codom / codom_mod``.

    Columns follow the echelon basis of ``dom``. Rows follow the canonical
    basis of the quotient: the echelon form of ``codom`` reduced modulo
    ``codom_mod``. ``codom`` defaults to the whole codomain.

    Raises:
        NotInvariant: if ``codom_mod`` is not inside ``codom`` or ``m(dom)``
            leaves ``codom`` modulo ``codom_mod``
    """
    if dom.ambient_dim != m.cols or codom_mod.ambient_dim != m.rows:
        raise ValueError("subspace dimensions do not match the matrix")
    if codom is None:
        codom = Subspace.full(m.rows)
    if not codom.contains_subspace(codom_mod):
        raise NotInvariant("the quotiented subspace is not inside the target subspace")

    quotient = Subspace.span(m.rows, [codom_mod.reduce(v) for v in codom.basis])
    columns = []
    for index, vector in enumerate(dom.basis):
        residue = codom_mod.reduce(m.apply(vector))
        if not quotient.contains(residue):
            raise NotInvariant(
                "map leaves the target subspace", domain_basis_index=index
            )
        columns.append(quotient.coordinates(residue))
    if not columns:
        return BitMatrix.zeros(quotient.dim, 0)
    return BitMatrix(np.column_stack(columns).reshape(quotient.dim, len(columns)))
