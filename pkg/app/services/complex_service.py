"""Complex service: validation, slicing, homology and the structure maps."""

import logging
from collections import Counter, defaultdict
from collections.abc import Callable, Iterable, Sequence

import numpy as np

from app.exceptions import EmptyComplex, NotRankOne, ValidationError
from app.models.generator import Generator
from app.models.knot_complex import KnotComplex
from app.models.rank_report import RankIndex, RankReport
from app.models.slice_complex import SliceComplex, SliceKind
from app.models.violation import Violation, ViolationCode
from app.utils.chain import ChainHomology, chain_homology, induced_map
from app.utils.gf2 import BitMatrix, rank

logger = logging.getLogger(__name__)


def transfer_matrix(
    source: Sequence[Generator],
    target: Sequence[Generator],
    image: Callable[[Generator], Iterable[str]],
) -> BitMatrix:
    """
    Chain-level matrix sending each source generator to the sum of its image ids.

    Ids outside ``target`` are dropped, which realizes projection onto a
    quotient slice.
    """
    rows = {g.id: i for i, g in enumerate(target)}
    bits = np.zeros((len(target), len(source)), dtype=np.uint8)
    for col, generator in enumerate(source):
        for target_id in image(generator):
            row = rows.get(target_id)
            if row is not None:
                bits[row, col] ^= 1
    return BitMatrix(bits)


class ComplexService:
    """Service for computations on a single validated knot complex."""

    def __init__(self, knot: KnotComplex):
        """
        Initialize service for a complex.

        Raises:
            ValidationError: if the complex breaks any invariant
        """
        self.knot = knot
        self.ensure_valid(knot)
        self._d = transfer_matrix(knot.generators, knot.generators, self._boundary)
        self._slices: dict[tuple[SliceKind, int], SliceComplex] = {}
        self._homology: dict[tuple[SliceKind, int], ChainHomology] = {}

    def _boundary(self, generator: Generator) -> frozenset[str]:
        return self.knot.boundary(generator.id)

    # Validation

    @staticmethod
    def validate(knot: KnotComplex) -> list[Violation]:
        """
        Check every complex invariant.

        Returns:
            All violations found, empty when the complex is valid. Never raises.
        """
        violations: list[Violation] = []

        def report(
            code: ViolationCode, generators: Iterable[str], message: str
        ) -> None:
            violations.append(
                Violation(code=code, generators=tuple(generators), message=message)
            )

        counts = Counter(g.id for g in knot.generators)
        for gid, count in counts.items():
            if count > 1:
                report(
                    ViolationCode.DUPLICATE_ID, [gid], f"id {gid} used {count} times"
                )

        known = set(counts)
        # Duplicate ids make boundaries ambiguous; unknown ids are just skipped.
        unique_ids = not violations
        for source, targets in knot.d.items():
            for gid in sorted({source, *targets} - known):
                report(
                    ViolationCode.UNKNOWN_GENERATOR,
                    [source, gid] if gid != source else [gid],
                    f"differential of {source} refers to unknown generator {gid}",
                )
        for source, target in knot.xi.items():
            for gid in sorted({source, target} - known):
                report(
                    ViolationCode.UNKNOWN_GENERATOR,
                    [gid],
                    f"duality {source} -> {target} refers to unknown generator {gid}",
                )
        for g in knot.generators:
            if g.id not in knot.xi:
                report(
                    ViolationCode.MISSING_DUALITY, [g.id], f"xi({g.id}) is not defined"
                )

        for x in knot.generators:
            for target_id in sorted(knot.boundary(x.id)):
                if target_id not in known:
                    continue
                y = knot.get(target_id)
                if y.a == x.a:
                    report(
                        ViolationCode.LEVEL_PRESERVING,
                        [x.id, y.id],
                        f"d({x.id}) contains {y.id} at the same level {x.a}",
                    )
                elif y.a < x.a:
                    report(
                        ViolationCode.LEVEL_DECREASING,
                        [x.id, y.id],
                        f"d({x.id}) contains {y.id} at level {y.a} below {x.a}",
                    )
                if y.m != x.m - 1:
                    report(
                        ViolationCode.DEGREE_MISMATCH,
                        [x.id, y.id],
                        f"d({x.id}) contains {y.id} of degree {y.m}, "
                        f"expected m({x.id})-1={x.m - 1}",
                    )

        if unique_ids:
            for x in knot.generators:
                parity: Counter[str] = Counter()
                for y in knot.boundary(x.id) & known:
                    parity.update(knot.boundary(y) & known)
                odd = (z for z, count in parity.items() if count % 2)
                for z in sorted(odd):
                    report(
                        ViolationCode.D_SQUARED_NONZERO,
                        [x.id, z],
                        f"d(d({x.id})) contains {z}",
                    )

        for x in knot.generators:
            partner_id = knot.xi.get(x.id)
            if partner_id is None or partner_id not in known:
                continue
            partner = knot.get(partner_id)
            if knot.xi.get(partner.id) != x.id:
                report(
                    ViolationCode.DUALITY_NOT_INVOLUTION,
                    [x.id, partner.id],
                    f"xi(xi({x.id})) is {knot.xi.get(partner.id)}, not {x.id}",
                )
            if partner.a != -x.a:
                report(
                    ViolationCode.DUALITY_LEVEL,
                    [x.id, partner.id],
                    f"a(xi({x.id})) must be -a({x.id})={-x.a}, found {partner.a}",
                )
            expected = x.m + 2 * x.a
            if partner.m != expected:
                report(
                    ViolationCode.DUALITY_DEGREE,
                    [x.id, partner.id],
                    f"m(xi({x.id})) must be m({x.id})+2·{x.a}={expected}, "
                    f"found {partner.m}",
                )
        return violations

    @classmethod
    def ensure_valid(cls, knot: KnotComplex) -> None:
        """Raise ValidationError carrying every violation, if there are any."""
        violations = cls.validate(knot)
        if violations:
            logger.warning("complex %s has %d violations", knot.name, len(violations))
            raise ValidationError(
                f"complex {knot.name!r} violates {len(violations)} invariant(s)",
                violations=[v.model_dump(mode="json") for v in violations],
            )

    # Slices and homology

    @property
    def differential(self) -> BitMatrix:
        """d_B in canonical generator order."""
        return self._d

    def slice(self, kind: SliceKind, s: int = 0) -> SliceComplex:
        """
        Sub- or quotient complex of the generators kept by ``kind`` at level ``s``.

        Empty slices are returned as 0-dimensional complexes.
        """
        key = (kind, 0 if kind is SliceKind.ALL else s)
        cached = self._slices.get(key)
        if cached is not None:
            return cached
        indices = [i for i, g in enumerate(self.knot.generators) if kind.keeps(g.a, s)]
        block = self._d.bits[np.ix_(indices, indices)]
        result = SliceComplex(
            kind=kind,
            level=key[1],
            generators=tuple(self.knot.generators[i] for i in indices),
            d=BitMatrix(block.reshape(len(indices), len(indices))),
        )
        self._slices[key] = result
        return result

    def full(self) -> SliceComplex:
        return self.slice(SliceKind.ALL)

    def chain_homology(
        self, kind: SliceKind = SliceKind.ALL, s: int = 0
    ) -> ChainHomology:
        """Cycles, boundaries and canonical class basis of a slice (cached)."""
        target = self.slice(kind, s)
        key = (target.kind, target.level)
        if key not in self._homology:
            self._homology[key] = chain_homology(target.d)
        return self._homology[key]

    def homology_rank(self, kind: SliceKind = SliceKind.ALL, s: int = 0) -> int:
        return self.chain_homology(kind, s).rank

    def homology(self, target: SliceComplex | None = None) -> RankReport:
        """
        Rank of homology in each homological degree.

        Args:
            target: slice to measure; the full complex when omitted

        Returns:
            RankReport by degree, listing every degree that carries generators
        """
        target = target or self.full()
        by_degree: dict[int, list[int]] = defaultdict(list)
        for i, g in enumerate(target.generators):
            by_degree[g.m].append(i)

        def rank_out_of(m: int) -> int:
            cols = by_degree.get(m, [])
            rows = by_degree.get(m - 1, [])
            if not cols or not rows:
                return 0
            return rank(BitMatrix(target.d.bits[np.ix_(rows, cols)]))

        ranks = {
            m: len(indices) - rank_out_of(m) - rank_out_of(m + 1)
            for m, indices in by_degree.items()
        }
        return RankReport(index=RankIndex.DEGREE, ranks=ranks)

    def bigraded_dims(self) -> dict[tuple[int, int], int]:
        """Dimension of B at each occupied (level, degree)."""
        dims = Counter((g.a, g.m) for g in self.knot.generators)
        return dict(sorted(dims.items()))

    def genus(self) -> int:
        """
        Largest occupied level.

        Raises:
            EmptyComplex: if there are no generators
        """
        if not self.knot.generators:
            raise EmptyComplex(f"complex {self.knot.name!r} has no generators")
        return max(g.a for g in self.knot.generators)

    def d_invariant(self) -> int:
        """
        Degree of the unique homology class.

        Raises:
            NotRankOne: if total homology rank is not 1
        """
        report = self.homology()
        if report.total != 1:
            raise NotRankOne(
                f"total homology rank is {report.total}, expected 1", rank=report.total
            )
        return next(m for m, r in report.ranks.items() if r)

    # Structure maps, all in canonical homology bases

    def _induced(
        self,
        source: tuple[SliceKind, int],
        target: tuple[SliceKind, int],
        image: Callable[[Generator], Iterable[str]],
    ) -> BitMatrix:
        chain = transfer_matrix(
            self.slice(*source).generators, self.slice(*target).generators, image
        )
        return induced_map(
            chain, self.chain_homology(*source), self.chain_homology(*target)
        )

    def _inclusion(self, generator: Generator) -> tuple[str]:
        return (generator.id,)

    def tau(self, s: int) -> BitMatrix:
        """τ_s: H(B{<s}) → B{s}, the level-s part of the differential."""
        return self._induced((SliceKind.LT, s), (SliceKind.AT, s), self._boundary)

    def q_map(self, s: int) -> BitMatrix:
        """q_s: B{s} → H(B{≤s}) induced by inclusion."""
        return self._induced((SliceKind.AT, s), (SliceKind.LE, s), self._inclusion)

    def p_map(self, s: int) -> BitMatrix:
        """p_s: H(B{≤s}) → H(B{>s}), the connecting map of the level filtration."""
        return self._induced((SliceKind.LE, s), (SliceKind.GT, s), self._boundary)

    def iota(self, s: int) -> BitMatrix:
        """ι_s: H(B{≥s}) → H(B) induced by inclusion."""
        return self._induced((SliceKind.GE, s), (SliceKind.ALL, 0), self._inclusion)

    def xi_map(self, s: int) -> BitMatrix:
        """Ξ_s: B{s} → B{−s}."""
        return self._induced(
            (SliceKind.AT, s), (SliceKind.AT, -s), lambda g: (self.knot.xi[g.id],)
        )

    def r_map(self, s: int) -> BitMatrix:
        """r_s: B{s} → H(B{>s}) induced by the differential."""
        return self._induced((SliceKind.AT, s), (SliceKind.GT, s), self._boundary)

    def mapping_cone_rank(self, s: int) -> int:
        """Homology rank of the mapping cone of p_s; always equals rank H(B)."""
        p = self.p_map(s)
        return (
            self.homology_rank(SliceKind.LE, s)
            + self.homology_rank(SliceKind.GT, s)
            - 2 * rank(p)
        )
