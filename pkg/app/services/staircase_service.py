"""Staircase service: construction, recognition and Alexander polynomials."""

import logging
from collections import Counter
from itertools import combinations

from app.exceptions import NotNormalizable
from app.models.generator import Generator
from app.models.knot_complex import KnotComplex
from app.models.staircase import AlexanderPoly, NotStaircase, StaircaseSpec
from app.services.complex_service import ComplexService

logger = logging.getLogger(__name__)


def generator_id(index: int) -> str:
    return f"x_{index}"


def staircase_name(spec: StaircaseSpec) -> str:
    return "staircase(" + ",".join(str(step) for step in spec.steps) + ")"


class StaircaseService:
    """Service for staircase complexes."""

    def delta_sequence(self, spec: StaircaseSpec) -> dict[int, int]:
        """
        Degree δ_i of the generator x_i for every i in [−k, k].

        δ_k = d_top; stepping down, an odd distance from the top adds the
        step width 2(n_{i+1} − n_i) − 1 and an even distance adds 1.
        """
        levels = spec.levels()
        k = spec.k
        deltas = {k: spec.d_top}
        for i in range(k - 1, -k - 1, -1):
            if (k - i) % 2:
                deltas[i] = deltas[i + 1] + 2 * (levels[i + 1] - levels[i]) - 1
            else:
                deltas[i] = deltas[i + 1] + 1
        return dict(sorted(deltas.items()))

    def make_staircase(self, spec: StaircaseSpec) -> KnotComplex:
        """
        Build the staircase complex of ``spec``.

        One generator x_i per index i ∈ [−k, k] at level n_i; d(x_i) = x_{i+1}
        exactly when k − i is even and positive; Ξ(x_i) = x_{−i}.
        """
        levels = spec.levels()
        deltas = self.delta_sequence(spec)
        k = spec.k
        generators = [
            Generator(id=generator_id(i), a=levels[i], m=deltas[i]) for i in levels
        ]
        d = {
            generator_id(i): frozenset({generator_id(i + 1)})
            for i in levels
            if i < k and (k - i) % 2 == 0
        }
        xi = {generator_id(i): generator_id(-i) for i in levels}
        return KnotComplex(name=staircase_name(spec), generators=generators, d=d, xi=xi)

    def recognize_staircase(self, knot: KnotComplex) -> StaircaseSpec | NotStaircase:
        """
        Recognize a staircase up to relabeling of generators.

        Staircase degrees strictly decrease along the index, so once levels and
        degrees match no filtered graded change of basis can alter the
        differential and recognition compares structure directly.

        Returns:
            The parameters, or NotStaircase with the first reason found
        """
        service = ComplexService(knot)
        multiplicity = Counter(g.a for g in knot.generators)
        for level, count in sorted(multiplicity.items()):
            if count > 1:
                return NotStaircase(reason=f"level {level} carries {count} generators")
        if 0 not in multiplicity:
            return NotStaircase(reason="level 0 is empty")
        total = service.homology().total
        if total != 1:
            return NotStaircase(reason=f"homology rank {total} ≠ 1")

        steps = tuple(level for level in sorted(multiplicity) if level > 0)
        top = max(knot.generators, key=lambda g: g.a)
        spec = StaircaseSpec(steps=steps, d_top=top.m)
        model = self.make_staircase(spec)

        at_level = {g.a: g for g in knot.generators}
        for expected in model.generators:
            found = at_level[expected.a]
            if found.m != expected.m:
                return NotStaircase(
                    reason=f"degree of the generator at level {expected.a} is "
                    f"{found.m}, expected {expected.m}"
                )
        for expected in model.generators:
            found = at_level[expected.a]
            expected_levels = {model.get(t).a for t in model.boundary(expected.id)}
            found_levels = {knot.get(t).a for t in knot.boundary(found.id)}
            if expected_levels != found_levels:
                return NotStaircase(
                    reason=f"differential at level {expected.a} differs from the "
                    "staircase pattern"
                )
        logger.debug("recognized %s as %s", knot.name, staircase_name(spec))
        return spec

    def alexander(self, knot: KnotComplex) -> AlexanderPoly:
        """
        Graded Euler characteristic of the complex, normalized so Δ(1) > 0.

        Raises:
            NotNormalizable: if the coefficients sum to zero
        """
        coeffs: Counter[int] = Counter()
        for (level, degree), dim in ComplexService(knot).bigraded_dims().items():
            coeffs[level] += dim if degree % 2 == 0 else -dim
        chi = sum(coeffs.values())
        if chi == 0:
            raise NotNormalizable(
                f"Euler characteristic of {knot.name!r} is zero", complex=knot.name
            )
        sign = 1 if chi > 0 else -1
        return AlexanderPoly(
            coeffs={s: sign * c for s, c in sorted(coeffs.items(), reverse=True) if c}
        )

    def is_alternating(self, poly: AlexanderPoly) -> bool:
        """Whether all coefficients are ±1 with signs alternating from the top."""
        ordered = [poly.coeffs[e] for e in sorted(poly.coeffs, reverse=True)]
        return all(abs(c) == 1 for c in ordered) and all(
            a == -b for a, b in zip(ordered, ordered[1:], strict=False)
        )

    def render(self, poly: AlexanderPoly) -> str:
        """Human-readable form, highest exponent first, e.g. ``t - 1 + t^-1``."""
        terms = []
        for exponent in sorted(poly.coeffs, reverse=True):
            coeff = poly.coeffs[exponent]
            magnitude = abs(coeff)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not terms:
                terms.append(body if coeff > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if coeff > 0 else '-'} {body}")
        return " ".join(terms) or "0"

    def enumerate_staircases(
        self, max_genus: int, d_tops: tuple[int, ...] = (0,)
    ) -> list[StaircaseSpec]:
        """All staircases of genus ≤ max_genus, ordered by (genus, steps, d_top)."""
        specs = [
            StaircaseSpec(steps=steps, d_top=d_top)
            for size in range(max_genus + 1)
            for steps in combinations(range(1, max_genus + 1), size)
            for d_top in d_tops
        ]
        return sorted(specs, key=lambda spec: (spec.genus, spec.steps, spec.d_top))
