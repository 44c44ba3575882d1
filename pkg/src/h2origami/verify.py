"""Verification suites run by ``h2origami verify`` and the test-suite.

Each suite returns :class:`SuiteResult` lines; ``status`` is ``proved``
for statements that must hold and ``conjecture`` for those only reported.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Iterable

from . import formulas
from .cylinders import TwoCylCoords, cusp_width, decompose, to_origami
from .orbits import (
    CensusRecord,
    brute_force_enumerate,
    classify_census,
    enumerate_coords,
    surface_keys,
)
from .origami import Generator, act_generator, canonical_key
from .weierstrass import invariant_from_coords, involution_oracle

log = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    suite: str
    n: int | None
    name: str
    status: str
    passed: bool
    detail: str = ""


def census_suite(primes: Iterable[int], workers: int = 1) -> tuple[list[SuiteResult], list[CensusRecord]]:
    results, censuses = [], []
    for n in primes:
        log.info("census n=%d", n)
        c = classify_census(n, workers=workers)
        censuses.append(c)
        for chk in c.formula_checks:
            results.append(SuiteResult("census", n, chk.name, chk.status, chk.passed,
                                       f"expected={chk.expected} observed={chk.observed}"))
        genus_ok = all(r.genus >= 0 for r in c.orbits)
        results.append(SuiteResult("census", n, "genus_natural", "proved", genus_ok))
    return results, censuses


def brute_force_suite(max_n: int) -> list[SuiteResult]:
    out = []
    for n in range(3, max_n + 1):
        log.info("brute force n=%d", n)
        brute = brute_force_enumerate(n)
        fast = surface_keys(n)
        out.append(SuiteResult("brute_force", n, "keys_equal", "proved", brute == fast,
                               f"{len(brute)} brute vs {len(fast)} enumerated"))
    return out


def _involution_check(o) -> tuple[bool, bool]:
    d = involution_oracle(o)
    c = decompose(o).coords
    return d.fixed_vertex_count == invariant_from_coords(c, check_primitive=False), d.total_fixed == 6


def involution_suite(max_n: int, random_count: int = 1000, random_range: tuple[int, int] = (13, 31),
                     seed: int = 0) -> list[SuiteResult]:
    out = []
    for n in range(3, max_n + 1):
        bad_inv = bad_six = 0
        coords = enumerate_coords(n)
        for c in coords:
            same, six = _involution_check(to_origami(c))
            bad_inv += not same
            bad_six += not six
        out.append(SuiteResult("involution", n, "invariant_matches_oracle", "proved", bad_inv == 0,
                               f"{len(coords)} surfaces, {bad_inv} mismatches"))
        out.append(SuiteResult("involution", n, "six_fixed_points", "proved", bad_six == 0))
    if random_count:
        rng = random.Random(seed)
        lo, hi = random_range
        pools = {}
        bad_inv = bad_six = 0
        for _ in range(random_count):
            n = rng.randint(lo, hi)
            if n not in pools:
                pools[n] = enumerate_coords(n)
            o = to_origami(rng.choice(pools[n]))
            perm = list(range(n))
            rng.shuffle(perm)
            same, six = _involution_check(o.relabel(perm))
            bad_inv += not same
            bad_six += not six
        out.append(SuiteResult("involution", None, f"random_{random_count}_n{lo}-{hi}", "proved",
                               bad_inv == 0 and bad_six == 0, f"{bad_inv} mismatches, {bad_six} bad totals"))
    return out


def u_orbit_size(c: TwoCylCoords) -> int:
    """Size of the U-orbit computed on canonical keys (no formula)."""
    o = to_origami(c)
    start = canonical_key(o)
    size = 1
    o = act_generator(o, Generator.U)
    while canonical_key(o) != start:
        o = act_generator(o, Generator.U)
        size += 1
    return size


def cusp_width_suite(max_n: int) -> list[SuiteResult]:
    out = []
    for n in range(3, max_n + 1):
        bad = total = 0
        for c in enumerate_coords(n, primitive_only=True):
            if isinstance(c, TwoCylCoords):
                total += 1
                bad += cusp_width(c) != u_orbit_size(c)
        out.append(SuiteResult("cusp_width", n, "formula_equals_bfs", "proved", bad == 0,
                               f"{total} two-cylinder surfaces, {bad} mismatches"))
    return out


def ratio_report(censuses: Iterable[CensusRecord]) -> list[str]:
    """Observed / leading-term ratios at prime ``n``; for inspection only."""
    k = formulas.ASYMPTOTICS
    lines = ["n    orbit  size/(3/16 n^3)  genus/(1/64 n^3)  cusps/(c n^2)"]
    cusp_c = dict(zip("AB", k.cusp_coeffs))
    for c in censuses:
        n = c.n
        for r in c.orbits:
            if r.label not in cusp_c:
                continue
            lines.append(
                f"{n:<4} {r.label:<6} {r.size / (float(k.orbit_size_coeff) * n**3):<16.4f} "
                f"{r.genus / (float(k.genus_coeff) * n**3):<17.4f} "
                f"{r.e_infinity / (float(cusp_c[r.label]) * n**2):.4f}"
            )
    return lines
