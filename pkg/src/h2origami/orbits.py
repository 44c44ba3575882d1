r"""
Enumeration of H(2) square-tiled surfaces and their SL(2, Z)-orbits.

A census works on the index set of all surfaces with ``n`` squares:

1. list canonical cylinder coordinates (:func:`enumerate_surfaces`);
2. canonicalise each surface and its images under ``U`` and ``V``;
3. orbits are the connected components of the resulting graph, cusps are
   the cycles of ``U``, elliptic points of order 2 (resp. 3) are fixed
   points of ``V`` (resp. ``UV`` or ``VU``).

Step 2 dominates the cost and is the only step that fans out over worker
processes; results are reassembled by index, so the output does not
depend on the number of workers.
"""
from __future__ import annotations

import itertools
import logging
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import formulas
from .cylinders import (
    Coords,
    CylinderDecomposition,
    OneCylCoords,
    SeparatrixDiagram,
    TwoCylCoords,
    canonical_cusp_representative,
    decompose,
    is_primitive,
    to_origami,
)
from .errors import BadN, BudgetExceeded, NonIntegralGenus, NotPrimitive
from .origami import (
    CanonicalKey,
    Generator,
    Origami,
    act_generator,
    canonical_key,
    is_transitive,
    origami_from_key,
    perm_compose,
    perm_inverse,
    period_lattice,
    perm_cycles,
)
from .weierstrass import invariant_from_coords, orbit_label

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _cyclic_triples(w: int):
    """Least rotations of the ordered 3-partitions of ``w``."""
    for a in range(1, w - 1):
        for b in range(1, w - a):
            c = w - a - b
            if (a, b, c) <= (b, c, a) and (a, b, c) <= (c, a, b):
                yield a, b, c


def enumerate_coords(n: int, primitive_only: bool = False) -> list[Coords]:
    """Canonical coordinates of every ``n``-square-tiled surface in H(2)."""
    if n < 3:
        raise BadN(f"n must be >= 3, got {n}")
    out: list[Coords] = []
    for h in range(1, n + 1):
        if n % h:
            continue
        w = n // h
        for a, b, c in _cyclic_triples(w):
            period = a if a == b == c else w
            out.extend(OneCylCoords(a, b, c, t, h) for t in range(period))
    for h1 in range(1, n):
        for w1 in range(1, (n - 1) // h1 + 1):
            rest = n - h1 * w1
            for h2 in range(1, rest + 1):
                if rest % h2:
                    continue
                w2 = rest // h2
                if w2 <= w1:
                    continue
                out.extend(TwoCylCoords(h1, h2, w1, w2, t1, t2)
                           for t1 in range(w1) for t2 in range(w2))
    if primitive_only:
        out = [c for c in out if is_primitive(c)]
    return out


def enumerate_surfaces(n: int, primitive_only: bool = False) -> list[CylinderDecomposition]:
    """All ``n``-square-tiled H(2) surfaces, one decomposition each.

    Canonical coordinates are a complete invariant, so the list has no
    repeats; :func:`surface_keys` checks this against canonical keys.
    """
    res = []
    for c in enumerate_coords(n, primitive_only):
        kind = SeparatrixDiagram.ONE_CYLINDER if isinstance(c, OneCylCoords) else SeparatrixDiagram.TWO_CYLINDER
        res.append(CylinderDecomposition(kind, c))
    return res


def surface_keys(n: int, primitive_only: bool = False) -> list[CanonicalKey]:
    """Sorted canonical keys of :func:`enumerate_surfaces`, deduplicated."""
    return sorted({canonical_key(to_origami(d.coords)) for d in enumerate_surfaces(n, primitive_only)})


def _commutator_is_h2(r: Sequence[int], u: Sequence[int], rinv: Sequence[int], uinv: Sequence[int]) -> bool:
    nontrivial = 0
    for i in range(len(r)):
        j = u[r[uinv[rinv[i]]]]
        if j != i:
            nontrivial += 1
            if nontrivial > 3 or u[r[uinv[rinv[j]]]] == i:
                return False
    return nontrivial == 3


def brute_force_enumerate(n: int) -> list[CanonicalKey]:
    """Independent oracle: scan every permutation pair on ``n <= 8`` squares.

    ``r`` is restricted to one representative per conjugacy class (cycle
    type); that is harmless because keys are conjugation invariant.
    """
    if not 1 <= n <= 8:
        raise BadN(f"brute force is limited to n <= 8, got {n}")
    reps = []
    for parts in _partitions(n):
        r = [0] * n
        start = 0
        for p in parts:
            for k in range(p):
                r[start + k] = start + (k + 1) % p
            start += p
        reps.append(tuple(r))
    keys = set()
    for r in reps:
        rinv = perm_inverse(r)
        for u in itertools.permutations(range(n)):
            if not _commutator_is_h2(r, u, rinv, perm_inverse(u)):
                continue
            if not is_transitive((r, u), n):
                continue
            keys.add(canonical_key(Origami(r, u)))
    return sorted(keys)


def _partitions(n: int, largest: int | None = None):
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for p in range(min(n, largest), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


# ---------------------------------------------------------------------------
# orbits of a single seed
# ---------------------------------------------------------------------------

_BFS_GENS = (Generator.U, Generator.U_inv, Generator.V)


def _step(key: CanonicalKey, g: Generator) -> CanonicalKey:
    return canonical_key(act_generator(origami_from_key(key), g))


def _require_primitive(o: Origami) -> None:
    if not period_lattice(o).is_primitive:
        raise NotPrimitive("seed surface is not primitive")


def orbit_bfs(seed: Origami) -> tuple[CanonicalKey, ...]:
    """Sorted canonical keys of the SL(2, Z)-orbit of a primitive seed."""
    _require_primitive(seed)
    start = canonical_key(seed)
    seen = {start}
    todo = deque([start])
    while todo:
        k = todo.popleft()
        for g in _BFS_GENS:
            k2 = _step(k, g)
            if k2 not in seen:
                seen.add(k2)
                todo.append(k2)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Cusp:
    representative: Coords
    width: int
    num_cylinders: int


def cusp_partition(orbit: Iterable[CanonicalKey]) -> list[Cusp]:
    """``U``-orbits of a ``U``-closed set of keys, by least member key."""
    keys = sorted(set(orbit))
    left = set(keys)
    cusps = []
    for k in keys:
        if k not in left:
            continue
        width = 0
        x = k
        while x in left:
            left.discard(x)
            width += 1
            x = _step(x, Generator.U)
        if x != k:
            raise ValueError("key set is not closed under U")
        d = decompose(origami_from_key(k))
        cusps.append(Cusp(canonical_cusp_representative(d.coords), width, d.num_cylinders))
    return cusps


def elliptic_counts(orbit: Iterable[CanonicalKey]) -> tuple[int, int]:
    """``(e2, e3)``: keys fixed by ``V``, and by ``UV`` or ``VU``."""
    e2 = e3 = 0
    for k in orbit:
        if _step(k, Generator.V) == k:
            e2 += 1
        uv = _step(_step(k, Generator.V), Generator.U)
        vu = _step(_step(k, Generator.U), Generator.V)
        if uv == k or vu == k:
            e3 += 1
    return e2, e3


def genus_gauss_bonnet(d: int, e2: int, e3: int, e_inf: int) -> int:
    """``1 + d/12 - e2/4 - e3/3 - e_inf/2``, checked to be a natural number."""
    g = 1 + Fraction(d, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(e_inf, 2)
    if g.denominator != 1 or g < 0:
        raise NonIntegralGenus(f"genus {g} from d={d}, e2={e2}, e3={e3}, e_inf={e_inf}")
    return int(g)


def find_one_cylinder_rep(seed: Origami, budget: int | None = None) -> tuple[tuple[str, ...], OneCylCoords]:
    """Shortest word in ``U, U_inv, V`` taking ``seed`` to a one-cylinder surface.

    ``budget`` bounds the number of surfaces visited (default: the whole orbit).
    """
    _require_primitive(seed)
    start = canonical_key(seed)
    parent: dict[CanonicalKey, tuple[CanonicalKey, Generator] | None] = {start: None}
    todo = deque([start])
    while todo:
        k = todo.popleft()
        d = decompose(origami_from_key(k))
        if isinstance(d.coords, OneCylCoords):
            word = []
            while parent[k] is not None:
                k, g = parent[k]
                word.append(g.value)
            return tuple(reversed(word)), d.coords
        if budget is not None and len(parent) > budget:
            raise BudgetExceeded(f"no one-cylinder surface within {budget} surfaces")
        for g in _BFS_GENS:
            k2 = _step(k, g)
            if k2 not in parent:
                parent[k2] = (k, g)
                todo.append(k2)
    raise BudgetExceeded("orbit has no one-cylinder surface")


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------

@dataclass
class OrbitRecord:
    n: int
    size: int
    invariant: int
    cusps: list[Cusp]
    e2: int
    e3: int
    genus: int
    label: str
    one_cyl_surfaces: int
    two_cyl_surfaces: int

    @property
    def e_infinity(self) -> int:
        return len(self.cusps)

    @property
    def has_one_cylinder(self) -> bool:
        return self.one_cyl_surfaces > 0

    @property
    def cusp_widths(self) -> list[int]:
        return sorted(c.width for c in self.cusps)

    def cusps_by_cylinders(self, k: int) -> int:
        return sum(1 for c in self.cusps if c.num_cylinders == k)


@dataclass
class FormulaCheck:
    name: str
    status: str  # "proved", "table" or "conjecture"
    expected: object
    observed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.observed


@dataclass
class CensusRecord:
    n: int
    orbits: list[OrbitRecord]
    totals: dict[str, int] = field(default_factory=dict)
    formula_checks: list[FormulaCheck] = field(default_factory=list)

    @property
    def hard_failures(self) -> list[FormulaCheck]:
        return [c for c in self.formula_checks if c.status != "conjecture" and not c.passed]

    @property
    def conjecture_failures(self) -> list[FormulaCheck]:
        return [c for c in self.formula_checks if c.status == "conjecture" and not c.passed]

    def orbit(self, label: str) -> OrbitRecord:
        (o,) = [o for o in self.orbits if o.label == label]
        return o


def _images(coords: Sequence[Coords]) -> list[tuple[CanonicalKey, CanonicalKey, CanonicalKey]]:
    out = []
    for c in coords:
        o = to_origami(c)
        out.append((canonical_key(o),
                    canonical_key(act_generator(o, Generator.U)),
                    canonical_key(act_generator(o, Generator.V))))
    return out


def _all_images(coords: list[Coords], workers: int) -> list[tuple[CanonicalKey, CanonicalKey, CanonicalKey]]:
    if workers <= 1 or len(coords) < 512:
        return _images(coords)
    chunk = -(-len(coords) // (4 * workers))
    parts = [coords[i:i + chunk] for i in range(0, len(coords), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return [x for part in ex.map(_images, parts) for x in part]


def default_workers() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def classify_census(n: int, workers: int = 1) -> CensusRecord:
    """All primitive ``n``-square-tiled surfaces in H(2), split into orbits."""
    if n < 3:
        raise BadN(f"n must be >= 3, got {n}")
    coords = enumerate_coords(n, primitive_only=True)
    log.info("n=%d: %d primitive surfaces", n, len(coords))
    images = _all_images(coords, workers)
    index = {k: i for i, (k, _, _) in enumerate(images)}
    if len(index) != len(coords):
        raise AssertionError("distinct coordinates with equal canonical keys")
    N = len(coords)
    U = [index[ku] for _, ku, _ in images]
    V = [index[kv] for _, _, kv in images]
    Uinv = perm_inverse(U)

    # connected components of the U/V graph, numbered by least key
    comp = [-1] * N
    order = sorted(range(N), key=lambda i: images[i][0])
    members: list[list[int]] = []
    for i in order:
        if comp[i] >= 0:
            continue
        c = len(members)
        comp[i] = c
        stack = [i]
        mem = []
        while stack:
            x = stack.pop()
            mem.append(x)
            for y in (U[x], Uinv[x], V[x]):
                if comp[y] < 0:
                    comp[y] = c
                    stack.append(y)
        members.append(sorted(mem, key=lambda j: images[j][0]))

    UV = perm_compose(U, V)  # V first, then U
    VU = perm_compose(V, U)
    records = []
    for mem in members:
        cusps = []
        done = set()
        for i in mem:
            if i in done:
                continue
            width = 0
            x = i
            while x not in done:
                done.add(x)
                width += 1
                x = U[x]
            c = coords[i]
            cusps.append(Cusp(canonical_cusp_representative(c), width, 1 if isinstance(c, OneCylCoords) else 2))
        e2 = sum(1 for i in mem if V[i] == i)
        e3 = sum(1 for i in mem if UV[i] == i or VU[i] == i)
        invs = {invariant_from_coords(coords[i], check_primitive=False) for i in mem}
        if len(invs) != 1:
            raise AssertionError(f"invariant not constant on an orbit: {invs}")
        inv = invs.pop()
        one = sum(1 for i in mem if isinstance(coords[i], OneCylCoords))
        records.append(OrbitRecord(
            n=n, size=len(mem), invariant=inv, cusps=cusps, e2=e2, e3=e3,
            genus=genus_gauss_bonnet(len(mem), e2, e3, len(cusps)),
            label=orbit_label(inv, n), one_cyl_surfaces=one, two_cyl_surfaces=len(mem) - one,
        ))
    records.sort(key=lambda r: (r.label, -r.size, r.invariant))
    census = CensusRecord(n, records)
    census.totals = {
        "surfaces": N,
        "one_cyl_surfaces": sum(r.one_cyl_surfaces for r in records),
        "two_cyl_surfaces": sum(r.two_cyl_surfaces for r in records),
        "cusps": sum(r.e_infinity for r in records),
        "one_cyl_cusps": sum(r.cusps_by_cylinders(1) for r in records),
        "two_cyl_cusps": sum(r.cusps_by_cylinders(2) for r in records),
        "orbits": len(records),
        "e2": sum(r.e2 for r in records),
        "e3": sum(r.e3 for r in records),
    }
    census.formula_checks = formula_checks(census)
    return census


def formula_checks(census: CensusRecord) -> list[FormulaCheck]:
    """Compare a census against every closed form that applies to its ``n``."""
    n = census.n
    tot = census.totals
    checks = [
        FormulaCheck("ems_total", "proved", formulas.ems_total(n), tot["surfaces"]),
        FormulaCheck("e3_zero", "proved", 0, tot["e3"]),
        FormulaCheck("sum_cusp_widths", "proved", [r.size for r in census.orbits],
                     [sum(r.cusp_widths) for r in census.orbits]),
    ]
    invs = sorted({r.invariant for r in census.orbits})
    if n == 3:
        checks.append(FormulaCheck("invariant_values", "proved", [1], invs))
    elif n % 2 == 0:
        checks.append(FormulaCheck("invariant_values", "proved", [2], invs))
        checks.append(FormulaCheck("single_orbit", "proved", 1, tot["orbits"]))
    else:
        checks.append(FormulaCheck("invariant_values", "proved", [1, 3], invs))
        checks.append(FormulaCheck("two_orbits", "proved", 2, tot["orbits"]))

    by = {r.label: r for r in census.orbits}
    if n >= 5 and formulas.is_prime(n):
        table = formulas.prime_counts(n)
        polys = formulas.prime_table(n)
        checks.append(FormulaCheck("all_orbits_have_one_cylinder", "proved", True,
                                   all(r.has_one_cylinder for r in census.orbits)))
        for orb in ("A", "B"):
            r = by.get(orb)
            obs = lambda f: None if r is None else f(r)  # noqa: E731
            checks += [
                FormulaCheck(f"{orb}_1cyl_surfaces", "proved", table[(orb, "1-cyl", "surfaces")],
                             obs(lambda r: r.one_cyl_surfaces)),
                FormulaCheck(f"{orb}_1cyl_cusps", "proved", table[(orb, "1-cyl", "cusps")],
                             obs(lambda r: r.cusps_by_cylinders(1))),
                FormulaCheck(f"{orb}_2cyl_surfaces", "proved", table[(orb, "2-cyl", "surfaces")],
                             obs(lambda r: r.two_cyl_surfaces)),
                FormulaCheck(f"{orb}_size_polynomial", "table", polys[(orb, "all", "surfaces")],
                             obs(lambda r: r.size)),
            ]
        checks += [
            FormulaCheck("2cyl_surfaces_S", "proved", table[("all", "2-cyl", "surfaces")], tot["two_cyl_surfaces"]),
            FormulaCheck("2cyl_cusps_sum", "proved", table[("all", "2-cyl", "cusps")], tot["two_cyl_cusps"]),
            FormulaCheck("1cyl_cusp_width_n", "proved", True,
                         all(c.width == n for r in census.orbits for c in r.cusps if c.num_cylinders == 1)),
            FormulaCheck("elliptic_orbit", "proved", "A" if n % 4 == 3 else "B",
                         "".join(sorted(r.label for r in census.orbits if r.e2 > 0))),
            FormulaCheck("elliptic_count", "conjecture", formulas.elliptic_conjecture(n), tot["e2"]),
        ]
    elif n >= 5 and n % 2 == 1:
        a, b = formulas.conjecture_orbit_totals(n)
        checks += [
            FormulaCheck("A_size_conjecture", "conjecture", a, by["A"].size if "A" in by else None),
            FormulaCheck("B_size_conjecture", "conjecture", b, by["B"].size if "B" in by else None),
        ]
    if n % 2 == 1:
        checks.append(FormulaCheck("2cyl_cusp_bound", "proved", True,
                                   formulas.two_cyl_cusp_bound(n) >= tot["two_cyl_cusps"]))
    return checks


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def orbit_dot(keys: Sequence[CanonicalKey], name: str = "orbit") -> str:
    """Graphviz description of an orbit: one node per surface, ``U`` and ``V`` edges."""
    keys = sorted(keys)
    idx = {k: i for i, k in enumerate(keys)}
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    for i, k in enumerate(keys):
        d = decompose(origami_from_key(k))
        lines.append(f'  s{i} [label="{d.coords}"];')
    for i, k in enumerate(keys):
        for g, style in ((Generator.U, "solid"), (Generator.V, "dashed")):
            j = idx[_step(k, g)]
            lines.append(f'  s{i} -> s{j} [label="{g.value}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
