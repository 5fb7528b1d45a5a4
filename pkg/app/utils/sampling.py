"""Seeded random complexes satisfying every complex invariant."""

from __future__ import annotations

import numpy as np

from app.exceptions import InvalidParameter
from app.models.generator import Generator
from app.models.knot_complex import KnotComplex
from app.utils.gf2 import BitMatrix, kernel_basis

# Chance that a generator gets a nonzero differential when cycles are available.
DIFFERENTIAL_DENSITY = 0.8


def random_symmetric_complex(
    levels_bound: int, dim_bound: int, seed: int
) -> KnotComplex:
    """
    Draw a reduced complex with levels in [−levels_bound, levels_bound].

    Generators come in duality orbits: a fixed point at level 0 or a pair at
    levels ±a. Each orbit's degrees are −a + t and a + t for a twist t in
    {−1, 0, 1}, which is exactly the duality grading law. The differential is
    filled from the top level down, each d(x) being a random cycle among the
    generators above x one degree lower, so d∘d = 0 by construction.

    Same arguments give the same complex.

    Raises:
        InvalidParameter: if a bound is negative
    """
    if levels_bound < 0 or dim_bound < 0:
        raise InvalidParameter(
            "random complex bounds must be non-negative",
            levels_bound=levels_bound,
            dim_bound=dim_bound,
        )
    rng = np.random.default_rng(seed)
    target = int(rng.integers(1, dim_bound + 1)) if dim_bound else 0

    generators: list[Generator] = []
    xi: dict[str, str] = {}
    orbit = 0
    while len(generators) < target:
        room = target - len(generators)
        level = int(rng.integers(0, levels_bound + 1)) if room >= 2 else 0
        twist = int(rng.integers(-1, 2))
        if level == 0:
            gid = f"g{orbit}"
            generators.append(Generator(id=gid, a=0, m=twist))
            xi[gid] = gid
        else:
            up, down = f"g{orbit}+", f"g{orbit}-"
            generators.append(Generator(id=up, a=level, m=twist - level))
            generators.append(Generator(id=down, a=-level, m=twist + level))
            xi[up], xi[down] = down, up
        orbit += 1

    d: dict[str, frozenset[str]] = {}
    for x in sorted(generators, key=lambda g: (-g.a, g.m, g.id)):
        candidates = [g for g in generators if g.a > x.a and g.m == x.m - 1]
        if not candidates:
            continue
        targets = sorted({t for c in candidates for t in d.get(c.id, ())})
        rows = {gid: i for i, gid in enumerate(targets)}
        bits = np.zeros((len(targets), len(candidates)), dtype=np.uint8)
        for col, c in enumerate(candidates):
            for t in d.get(c.id, ()):
                bits[rows[t], col] = 1
        cycles = kernel_basis(BitMatrix(bits))
        if cycles.dim == 0 or rng.random() >= DIFFERENTIAL_DENSITY:
            continue
        coords = rng.integers(0, 2, size=cycles.dim)
        if not coords.any():
            coords[int(rng.integers(0, cycles.dim))] = 1
        chosen = cycles.combination(coords)
        d[x.id] = frozenset(
            c.id for c, bit in zip(candidates, chosen, strict=True) if bit
        )

    return KnotComplex(name=f"random-{seed}", generators=generators, d=d, xi=xi)
