"""Homology of GF(2) chain complexes and the maps they induce."""

from __future__ import annotations

from dataclasses import dataclass

from app.exceptions import NotInvariant
from app.utils.gf2 import (
    BitMatrix,
    Subspace,
    homology_rank,
    image_basis,
    kernel_basis,
    restrict_quotient,
)


@dataclass(frozen=True, eq=False)
class ChainHomology:
    """
    Cycles, boundaries and a canonical basis of homology classes.

    ``classes`` spans a complement of ``boundaries`` inside ``cycles``; each
    basis vector is a cycle reduced modulo the boundaries, so homology
    coordinates of a cycle are read off the pivots of ``classes``.
    """

    differential: BitMatrix
    cycles: Subspace
    boundaries: Subspace
    classes: Subspace

    @property
    def rank(self) -> int:
        return self.classes.dim


def chain_homology(d: BitMatrix) -> ChainHomology:
    """
    Homology of a square differential.

    Raises:
        CompositionNonzero: if d·d != 0
    """
    if d.rows != d.cols:
        raise ValueError(f"a differential must be square, got {d.shape}")
    expected = homology_rank(d, d)
    cycles = kernel_basis(d)
    boundaries = image_basis(d)
    classes = Subspace.span(d.cols, [boundaries.reduce(v) for v in cycles.basis])
    assert classes.dim == expected
    return ChainHomology(d, cycles, boundaries, classes)


def check_chain_map(f: BitMatrix, d_source: BitMatrix, d_target: BitMatrix) -> None:
    """Raise NotInvariant unless d_target·f = f·d_source."""
    if d_target @ f != f @ d_source:
        raise NotInvariant("map does not commute with the differentials")


def induced_map(
    f: BitMatrix, source: ChainHomology, target: ChainHomology
) -> BitMatrix:
    """Matrix of f_* from the classes of ``source`` to the classes of ``target``."""
    check_chain_map(f, source.differential, target.differential)
    return restrict_quotient(f, source.classes, target.boundaries, codom=target.cycles)
