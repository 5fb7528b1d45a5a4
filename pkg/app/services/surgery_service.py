"""Surgery service: mapping cones, glued complexes and the simplicity criterion."""

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from app.exceptions import (
    CompositionNonzero,
    CriterionMismatch,
    InvalidParameter,
    NotInvariant,
    OutOfRange,
    SurgeryInvariantError,
)
from app.models.cone import (
    ConeComplex,
    EpsilonMap,
    GluedComplex,
    LargeSurgeryRanks,
    Slot,
    SlotGenerator,
    UpsilonMap,
)
from app.models.knot_complex import KnotComplex
from app.models.rank_report import RankIndex, RankReport
from app.models.slice_complex import SliceKind
from app.services.complex_service import ComplexService
from app.utils.chain import ChainHomology, chain_homology, check_chain_map, induced_map
from app.utils.gf2 import BitMatrix, homology_rank

logger = logging.getLogger(__name__)


class SimplicityCertificate(BaseModel):
    """Both sides of the simplicity criterion for one surgery coefficient."""

    model_config = ConfigDict(frozen=True)

    n: int
    simple: bool
    hfk_total: int
    hf_total: int
    witness_levels: list[int]
    witness_classes: dict[int, list[str]]


class SurgeryService:
    """Service for the surgery formulas of one knot complex."""

    def __init__(self, knot: KnotComplex):
        """Initialize service; validates the complex and fixes its genus."""
        self.knot = knot
        self.complexes = ComplexService(knot)
        self.genus = self.complexes.genus()
        self._cones: dict[tuple[int, int], ConeComplex] = {}
        self._cone_homology: dict[tuple[int, int], ChainHomology] = {}
        self._upsilon_chains: dict[tuple[int, int], BitMatrix] = {}
        self._hf_ranks: dict[int, RankReport] = {}

    @staticmethod
    def _check_coefficient(n: int) -> None:
        if n < 1:
            raise InvalidParameter(
                f"surgery coefficient must be at least 1, got {n}", n=n
            )

    def support(self, n: int) -> range:
        """Levels s with −g < s ≤ n+g, outside which C_n(s) is acyclic."""
        return range(-self.genus + 1, n + self.genus + 1)

    # Cones

    def build_cone(self, n: int, s: int) -> ConeComplex:
        """
        Build C_n(s) = B{≥s} ⊕ B{≥n+1−s} ⊕ B.

        The differential is d on each summand plus the inclusions of the two
        slice summands into B.

        Raises:
            InvalidParameter: if n < 1
        """
        self._check_coefficient(n)
        key = (n, s)
        if key in self._cones:
            return self._cones[key]

        upper = self.complexes.slice(SliceKind.GE, s)
        lower = self.complexes.slice(SliceKind.GE, n + 1 - s)
        full = self.complexes.full()
        slots = (
            *(SlotGenerator(Slot.X, g) for g in upper.generators),
            *(SlotGenerator(Slot.Y, g) for g in lower.generators),
            *(SlotGenerator(Slot.Z, g) for g in full.generators),
        )
        x_end = upper.dim
        y_end = x_end + lower.dim
        bits = np.zeros((len(slots), len(slots)), dtype=np.uint8)
        bits[:x_end, :x_end] = upper.d.bits
        bits[x_end:y_end, x_end:y_end] = lower.d.bits
        bits[y_end:, y_end:] = full.d.bits
        for offset, summand in ((0, upper), (x_end, lower)):
            for i, g in enumerate(summand.generators):
                bits[y_end + self.knot.index(g.id), offset + i] = 1

        d = BitMatrix(bits)
        if not (d @ d).is_zero():
            raise CompositionNonzero(f"cone C_{n}({s}) has d² ≠ 0", n=n, s=s)
        cone = ConeComplex(n=n, s=s, slots=slots, d=d)
        logger.debug("built C_%d(%d) of dimension %d", n, s, cone.dim)
        self._cones[key] = cone
        return cone

    def cone_homology(self, n: int, s: int) -> ChainHomology:
        key = (n, s)
        if key not in self._cone_homology:
            self._cone_homology[key] = chain_homology(self.build_cone(n, s).d)
        return self._cone_homology[key]

    def cone_rank(self, n: int, s: int) -> int:
        return self.cone_homology(n, s).rank

    def hfk_ranks(self, n: int) -> RankReport:
        """
        Rank of H(C_n(s)) for every s in the support.

        Raises:
            InvalidParameter: if n < 1
            SurgeryInvariantError: if a cone just outside the support is not acyclic
        """
        self._check_coefficient(n)
        for outside in (-self.genus, n + self.genus + 1):
            found = self.cone_rank(n, outside)
            if found:
                logger.warning(
                    "C_%d(%d) outside the support has rank %d", n, outside, found
                )
                raise SurgeryInvariantError(
                    f"C_{n}({outside}) should be acyclic, found rank {found}",
                    n=n,
                    s=outside,
                )
        ranks = {s: self.cone_rank(n, s) for s in self.support(n)}
        return RankReport(index=RankIndex.LEVEL, ranks=ranks)

    def reduced_cone(self, n: int, s: int) -> BitMatrix:
        """
        Differential of C̃_n(s) = H{≥s} ⊕ H{≥n+1−s} ⊕ H.

        Only the block (ι_s)_* ⊕ (ι_{n+1−s})_* into H is nonzero.
        """
        self._check_coefficient(n)
        upper = self.complexes.iota(s)
        lower = self.complexes.iota(n + 1 - s)
        total = self.complexes.homology_rank()
        dim = upper.cols + lower.cols + total
        bits = np.zeros((dim, dim), dtype=np.uint8)
        start = upper.cols + lower.cols
        bits[start:, : upper.cols] = upper.bits
        bits[start:, upper.cols : start] = lower.bits
        return BitMatrix(bits)

    def hfk_rank_reduced(self, n: int, s: int) -> int:
        """Rank of H(C̃_n(s)); equals rank H(C_n(s))."""
        reduced = self.reduced_cone(n, s)
        return homology_rank(reduced, reduced)

    # Gluing

    def _upsilon_chain(self, n: int, s: int) -> BitMatrix:
        key = (n, s)
        if key in self._upsilon_chains:
            return self._upsilon_chains[key]
        source = self.build_cone(n, s)
        target = self.build_cone(n, s + n)
        bits = np.zeros((target.dim, source.dim), dtype=np.uint8)
        for col in source.block(Slot.X):
            generator = source.slots[col].generator
            if generator.a != s:
                continue
            dual = self.knot.dual(generator)
            bits[target.position(Slot.Z, dual.id), col] ^= 1
            for target_id in self.knot.boundary(dual.id):
                row = target.position(Slot.Y, target_id)
                if row is None:
                    raise SurgeryInvariantError(
                        f"d({dual.id}) leaves B{{≥{1 - s}}}",
                        n=n,
                        s=s,
                        generator=target_id,
                    )
                bits[row, col] ^= 1
        chain = BitMatrix(bits)
        try:
            check_chain_map(chain, source.d, target.d)
        except NotInvariant as exc:
            raise SurgeryInvariantError(
                f"Υ_{s} is not a chain map for n={n}", n=n, s=s
            ) from exc
        self._upsilon_chains[key] = chain
        return chain

    def upsilon(self, n: int, s: int) -> UpsilonMap:
        """
        Υ_s: C_n(s) → C_n(s+n) and its induced map on homology.

        Υ_s(x, y, z) = (0, d Ξ_s π_s x, Ξ_s π_s x), where π_s keeps the
        level-s part of x; it vanishes for s > g.
        """
        self._check_coefficient(n)
        chain = self._upsilon_chain(n, s)
        induced = induced_map(
            chain, self.cone_homology(n, s), self.cone_homology(n, s + n)
        )
        return UpsilonMap(
            n=n,
            s=s,
            source=self.build_cone(n, s),
            target=self.build_cone(n, s + n),
            chain=chain,
            induced=induced,
        )

    def glued_complex(self, n: int, residue: int) -> GluedComplex:
        """
        G_n[r]: the cones C_n(t), t ≡ r mod n and −g < t ≤ n+g, joined by Υ_t.

        Raises:
            InvalidParameter: if n < 1
        """
        self._check_coefficient(n)
        levels = [t for t in self.support(n) if (t - residue) % n == 0]
        blocks = {t: self.build_cone(n, t) for t in levels}
        offsets: dict[int, int] = {}
        start = 0
        for t, cone in blocks.items():
            offsets[t] = start
            start += cone.dim

        bits = np.zeros((start, start), dtype=np.uint8)
        cross: dict[int, BitMatrix] = {}
        for t, cone in blocks.items():
            o = offsets[t]
            bits[o : o + cone.dim, o : o + cone.dim] = cone.d.bits
            if t + n in blocks:
                chain = self._upsilon_chain(n, t)
                cross[t] = chain
                p = offsets[t + n]
                bits[p : p + chain.rows, o : o + chain.cols] = chain.bits

        d = BitMatrix(bits)
        if not (d @ d).is_zero():
            raise CompositionNonzero(
                f"G_{n}[{residue}] has d² ≠ 0", n=n, residue=residue
            )
        logger.debug(
            "glued G_%d[%d] from %d blocks, dimension %d",
            n,
            residue,
            len(blocks),
            start,
        )
        return GluedComplex(n=n, residue=residue % n, blocks=blocks, cross=cross, d=d)

    def hf_ranks(self, n: int) -> RankReport:
        """Rank of H(G_n[r]) for every residue r mod n."""
        self._check_coefficient(n)
        if n not in self._hf_ranks:
            ranks = {}
            for r in range(n):
                glued = self.glued_complex(n, r)
                ranks[r] = homology_rank(glued.d, glued.d)
            self._hf_ranks[n] = RankReport(index=RankIndex.SPIN_C, ranks=ranks)
        return self._hf_ranks[n]

    def is_lspace(self, n: int) -> bool:
        """Whether every Spin^c class of the surgery has hf rank exactly 1."""
        return all(r == 1 for r in self.hf_ranks(n).ranks.values())

    # Criteria

    def is_simple(self, n: int) -> SimplicityCertificate:
        """
        Decide simplicity of the surgered knot in two independent ways.

        Compares total hfk and hf ranks, and separately checks that every
        (Υ_s)_* vanishes on the support. Witnesses are the levels with a
        nonzero induced map and a class it does not kill.

        Raises:
            CriterionMismatch: if the two answers disagree
            SurgeryInvariantError: if total hfk rank is below total hf rank
        """
        hfk_total = self.hfk_ranks(n).total
        hf_total = self.hf_ranks(n).total
        if hfk_total < hf_total:
            raise SurgeryInvariantError(
                f"hfk rank {hfk_total} is below hf rank {hf_total}", n=n
            )

        witness_levels: list[int] = []
        witness_classes: dict[int, list[str]] = {}
        for s in self.support(n):
            upsilon = self.upsilon(n, s)
            if upsilon.vanishes:
                continue
            column = int(np.flatnonzero(upsilon.induced.bits.any(axis=0))[0])
            cycle = self.cone_homology(n, s).classes.basis[column]
            witness_levels.append(s)
            witness_classes[s] = upsilon.source.describe(cycle)

        by_ranks = hfk_total == hf_total
        by_upsilon = not witness_levels
        if by_ranks != by_upsilon:
            logger.warning(
                "simplicity criteria disagree for %s at n=%d", self.knot.name, n
            )
            raise CriterionMismatch(
                "rank equality and Υ vanishing disagree",
                n=n,
                hfk_total=hfk_total,
                hf_total=hf_total,
                witness_levels=witness_levels,
            )
        return SimplicityCertificate(
            n=n,
            simple=by_ranks,
            hfk_total=hfk_total,
            hf_total=hf_total,
            witness_levels=witness_levels,
            witness_classes=witness_classes,
        )

    def _check_level(self, s: int) -> None:
        if not -self.genus < s <= self.genus:
            raise OutOfRange(
                f"level {s} is outside ({-self.genus}, {self.genus}]",
                s=s,
                genus=self.genus,
            )

    def epsilon(self, s: int, n: int | None = None) -> EpsilonMap:
        """
        ε_s = q_{−s} ∘ Ξ_s ∘ τ_s: H(B{<s}) → H(B{≤−s}).

        Args:
            s: level with −g < s ≤ g
            n: when given and n ≥ 2g, also check the large-surgery identification
                and attach its ranks to the result

        Raises:
            OutOfRange: if s is outside (−g, g]
        """
        self._check_level(s)
        complexes = self.complexes
        matrix = complexes.q_map(-s) @ complexes.xi_map(s) @ complexes.tau(s)
        large = None
        if n is not None:
            self._check_coefficient(n)
            if n >= 2 * self.genus:
                large = self.large_surgery_ranks(n, s)
        return EpsilonMap(
            s=s,
            matrix=matrix,
            source_rank=complexes.homology_rank(SliceKind.LT, s),
            target_rank=complexes.homology_rank(SliceKind.LE, -s),
            large_surgery=large,
        )

    def large_surgery_ranks(self, n: int, s: int) -> LargeSurgeryRanks:
        """
        Compare cone ranks with slice ranks for large surgery.

        For n ≥ 2g, rank H(C_n(s)) = rank H(B{<s}) and
        rank H(C_n(s+n)) = rank H(B{≤−s}).

        Raises:
            InvalidParameter: if n < 2g
            OutOfRange: if s is outside (−g, g]
            SurgeryInvariantError: if either equality fails
        """
        self._check_coefficient(n)
        if n < 2 * self.genus:
            raise InvalidParameter(
                f"large surgery needs n ≥ 2g = {2 * self.genus}, got {n}", n=n
            )
        self._check_level(s)
        ranks = LargeSurgeryRanks(
            n=n,
            s=s,
            cone_rank=self.cone_rank(n, s),
            lower_rank=self.complexes.homology_rank(SliceKind.LT, s),
            shifted_cone_rank=self.cone_rank(n, s + n),
            dual_rank=self.complexes.homology_rank(SliceKind.LE, -s),
        )
        if (
            ranks.cone_rank != ranks.lower_rank
            or ranks.shifted_cone_rank != ranks.dual_rank
        ):
            logger.warning("large surgery identification failed at n=%d, s=%d", n, s)
            raise SurgeryInvariantError(
                "large surgery ranks do not match the slice ranks", **ranks.model_dump()
            )
        return ranks
