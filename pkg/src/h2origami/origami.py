r"""
Square-tiled surfaces as pairs of permutations.

A surface tiled by ``n`` unit squares labelled ``0, ..., n-1`` is the pair
``(r, u)`` where ``r[i]`` is the square to the right of square ``i`` and
``u[i]`` the square above it.  Two pairs describe the same surface when they
differ by a simultaneous relabelling of the squares.

Conventions (frozen; every formula in the package is tested against them):

- permutations are tuples in one-line notation, ``p[i]`` is the image of ``i``;
- ``U`` is the horizontal shear ``(x, y) -> (x + y, y)``, acting as
  ``(r, u) -> (r, u o r^-1)``: every row of squares slides one unit to the
  right relative to the row below;
- ``V`` is the counterclockwise quarter turn, acting as ``(r, u) -> (u^-1, r)``;
- ``MinusId`` acts as ``(r, u) -> (r^-1, u^-1)``, which equals ``V o V``.

The bottom-left corner of square ``i`` is the same point as the bottom-left
corner of ``corner_perm(o)[i]``; cycles of that permutation are the vertices
of the tiling, and a cycle of length ``k`` is a cone point of angle
``2 pi k``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import NotConnected, ParseError, WrongStratum

Perm = tuple[int, ...]


# ---------------------------------------------------------------------------
# permutation helpers
# ---------------------------------------------------------------------------

def perm_check(p: Sequence[int], n: int | None = None) -> bool:
    """Return whether ``p`` is a bijection of ``range(len(p))`` (of size ``n``)."""
    if n is not None and len(p) != n:
        return False
    return sorted(p) == list(range(len(p)))


def perm_inverse(p: Sequence[int]) -> Perm:
    q = [0] * len(p)
    for i, j in enumerate(p):
        q[j] = i
    return tuple(q)


def perm_compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """Return ``p o q``, i.e. ``i -> p[q[i]]``."""
    return tuple(p[j] for j in q)


def perm_cycles(p: Sequence[int], singletons: bool = True) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if seen[i]:
            continue
        c = []
        j = i
        while not seen[j]:
            seen[j] = True
            c.append(j)
            j = p[j]
        if singletons or len(c) > 1:
            cycles.append(tuple(c))
    return cycles


def perm_to_string(p: Sequence[int]) -> str:
    """Cycle notation, e.g. ``(0 1 2)(3 4)``; the identity is ``()``."""
    cycles = perm_cycles(p, singletons=False)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def perm_from_string(s: str, n: int) -> Perm:
    """Parse cycle notation produced by :func:`perm_to_string`.

    >>> perm_from_string("(0 2)", 3)
    (2, 1, 0)
    """
    s = s.strip()
    if _CYCLE_RE.sub("", s).strip():
        raise ParseError(f"not a permutation in cycle notation: {s!r}")
    p = list(range(n))
    seen = set()
    for body in _CYCLE_RE.findall(s):
        try:
            cyc = [int(tok) for tok in body.replace(",", " ").split()]
        except ValueError:
            raise ParseError(f"bad cycle ({body})") from None
        for x in cyc:
            if not 0 <= x < n or x in seen:
                raise ParseError(f"bad or repeated element {x} in {s!r}")
            seen.add(x)
        for k, x in enumerate(cyc):
            p[x] = cyc[(k + 1) % len(cyc)]
    return tuple(p)


def is_transitive(gens: Iterable[Sequence[int]], n: int) -> bool:
    gens = list(gens)
    seen = [False] * n
    seen[0] = True
    todo = [0]
    count = 1
    while todo:
        x = todo.pop()
        for g in gens:
            y = g[x]
            if not seen[y]:
                seen[y] = True
                count += 1
                todo.append(y)
    return count == n


# ---------------------------------------------------------------------------
# origamis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Origami:
    """An ``n``-square-tiled surface given by its right and up neighbours."""

    r: Perm
    u: Perm

    def __post_init__(self):
        if len(self.r) != len(self.u):
            raise ValueError("r and u must have the same size")

    @property
    def n(self) -> int:
        return len(self.r)

    # the two names used in the literature
    @property
    def sigma_h(self) -> Perm:
        return self.r

    @property
    def sigma_v(self) -> Perm:
        return self.u

    @classmethod
    def from_strings(cls, r: str, u: str, n: int) -> "Origami":
        return cls(perm_from_string(r, n), perm_from_string(u, n))

    def to_strings(self) -> tuple[str, str]:
        return perm_to_string(self.r), perm_to_string(self.u)

    def relabel(self, p: Sequence[int]) -> "Origami":
        """Conjugate by ``p``: square ``i`` gets the new label ``p[i]``."""
        n = self.n
        r = [0] * n
        u = [0] * n
        for i in range(n):
            r[p[i]] = p[self.r[i]]
            u[p[i]] = p[self.u[i]]
        return Origami(tuple(r), tuple(u))

    def __repr__(self):
        r, u = self.to_strings()
        return f"Origami(r={r!r}, u={u!r}, n={self.n})"


def corner_perm(o: Origami) -> Perm:
    """Map each square to the next square sharing its bottom-left corner.

    Turning around a vertex: left, down, right, up.
    """
    rinv = perm_inverse(o.r)
    uinv = perm_inverse(o.u)
    r, u = o.r, o.u
    return tuple(u[r[uinv[rinv[i]]]] for i in range(o.n))


def cone_squares(o: Origami) -> list[int]:
    """Squares whose bottom-left corner is a cone point (angle > 2 pi)."""
    return sorted(i for c in perm_cycles(corner_perm(o), singletons=False) for i in c)


@dataclass(frozen=True)
class StratumSignature:
    cone_orders: tuple[int, ...]
    genus: int

    @property
    def is_h2(self) -> bool:
        return self.cone_orders == (2,)


def stratum_signature(o: Origami) -> StratumSignature:
    """Zero orders and genus; raises :class:`NotConnected` if disconnected."""
    n = o.n
    if not (perm_check(o.r, n) and perm_check(o.u, n)):
        raise ValueError("r and u must be permutations of range(n)")
    if n == 0 or not is_transitive((o.r, o.u), n):
        raise NotConnected(f"the squares of {o!r} do not form a connected surface")
    orders = tuple(sorted((len(c) - 1 for c in perm_cycles(corner_perm(o), False)), reverse=True))
    return StratumSignature(orders, sum(orders) // 2 + 1)


def validate_h2(o: Origami) -> StratumSignature:
    """Signature of ``o``, raising :class:`WrongStratum` unless it lies in H(2)."""
    sig = stratum_signature(o)
    if not sig.is_h2:
        raise WrongStratum(f"cone orders {sig.cone_orders} (genus {sig.genus}), expected (2,)")
    return sig


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

CanonicalKey = bytes


def _relabel_from(r: Perm, u: Perm, start: int, best: list[int] | None) -> list[int] | None:
    # Breadth-first labelling from ``start``; the sequence r'[0], u'[0],
    # r'[1], u'[1], ... is produced in order, so we can stop as soon as it
    # exceeds ``best``.
    n = len(r)
    label = [-1] * n
    label[start] = 0
    order = [start]
    nxt = 1
    out = []
    tie = best is not None
    pos = 0
    for k in range(n):
        if k == len(order):
            raise NotConnected("canonical keys need a connected origami")
        x = order[k]
        for y in (r[x], u[x]):
            ly = label[y]
            if ly < 0:
                ly = label[y] = nxt
                nxt += 1
                order.append(y)
            if tie:
                b = best[pos]
                if ly > b:
                    return None
                if ly < b:
                    tie = False
            out.append(ly)
            pos += 1
    return out


def canonical_sequence(o: Origami) -> list[int]:
    """Lexicographically least interleaved labelling over all start squares."""
    best = None
    r, u = o.r, o.u
    for s in range(o.n):
        cand = _relabel_from(r, u, s, best)
        if cand is not None:
            best = cand
    return best


def _encode(seq: Sequence[int], n: int) -> bytes:
    if n <= 256:
        return b"\x01" + bytes(seq)
    return b"\x02" + b"".join(x.to_bytes(2, "big") for x in seq)


def canonical_key(o: Origami) -> CanonicalKey:
    """Bytes equal for two origamis iff they differ by a relabelling of squares.

    The encoding is a width byte followed by ``r'[0], u'[0], r'[1], ...``
    of the least relabelling, big-endian, so byte order agrees with the
    lexicographic order of the labellings.  Supports ``n <= 65536``.
    Raises :class:`NotConnected` if ``<r, u>`` is not transitive.
    """
    return _encode(canonical_sequence(o), o.n)


def canonical_origami(o: Origami) -> Origami:
    return origami_from_key(canonical_key(o))


def origami_from_key(key: CanonicalKey) -> Origami:
    width = key[0]
    body = key[1:]
    if width == 1:
        seq = list(body)
    else:
        seq = [int.from_bytes(body[i:i + 2], "big") for i in range(0, len(body), 2)]
    return Origami(tuple(seq[0::2]), tuple(seq[1::2]))


# ---------------------------------------------------------------------------
# SL(2, Z) action
# ---------------------------------------------------------------------------

class Generator(enum.Enum):
    U = "U"
    U_inv = "U_inv"
    V = "V"
    MinusId = "MinusId"


def act_generator(o: Origami, g: Generator | str) -> Origami:
    """Image of ``o`` under a generator of SL(2, Z) (see module docstring)."""
    g = Generator(g)
    r, u = o.r, o.u
    if g is Generator.U:
        rinv = perm_inverse(r)
        return Origami(r, tuple(u[rinv[i]] for i in range(o.n)))
    if g is Generator.U_inv:
        return Origami(r, tuple(u[r[i]] for i in range(o.n)))
    if g is Generator.V:
        return Origami(perm_inverse(u), r)
    return Origami(perm_inverse(r), perm_inverse(u))


def act_word(o: Origami, word: Iterable[Generator | str]) -> Origami:
    """Apply the generators of ``word`` left to right."""
    for g in word:
        o = act_generator(o, g)
    return o


# ---------------------------------------------------------------------------
# period lattice
# ---------------------------------------------------------------------------

def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


@dataclass(frozen=True)
class LatticeBasis:
    """Upper triangular Hermite normal form ``[[a, b], [0, d]]``.

    The columns ``(a, 0)`` and ``(b, d)`` are a basis, ``a, d > 0`` and
    ``0 <= b < a``.
    """

    m: tuple[tuple[int, int], tuple[int, int]]

    @property
    def index(self) -> int:
        return self.m[0][0] * self.m[1][1]

    @property
    def is_primitive(self) -> bool:
        return self.m == ((1, 0), (0, 1))

    @property
    def columns(self) -> tuple[tuple[int, int], tuple[int, int]]:
        (a, b), (_, d) = self.m
        return (a, 0), (b, d)


def hermite_basis(vectors: Iterable[tuple[int, int]]) -> LatticeBasis:
    """HNF basis of the subgroup of Z^2 spanned by ``vectors`` (must have rank 2)."""
    px = py = 0
    xs = []
    for vx, vy in vectors:
        if vy == 0:
            xs.append(vx)
            continue
        if py == 0:
            # the old pivot, if any, lies on the x axis
            xs.append(px)
            px, py = vx, vy
            continue
        g, s, t = xgcd(py, vy)
        xs.append((vy // g) * px - (py // g) * vx)
        px, py = s * px + t * vx, g
    a = 0
    for x in xs:
        a = gcd(a, x)
    if a == 0 or py == 0:
        raise ValueError("vectors do not span a rank 2 lattice")
    if py < 0:
        px, py = -px, -py
    return LatticeBasis(((a, px % a), (0, py)))


def period_lattice(o: Origami) -> LatticeBasis:
    """HNF basis of the lattice of periods of ``o``.

    Squares are developed into the plane along a spanning tree; every
    remaining gluing closes a loop whose holonomy is a period.  Those loops
    generate the first homology of the surface, and with a single cone point
    relative and absolute periods coincide.
    """
    n = o.n
    pos: list[tuple[int, int] | None] = [None] * n
    pos[0] = (0, 0)
    todo = [0]
    vecs = []
    while todo:
        x = todo.pop()
        px, py = pos[x]
        for y, (dx, dy) in ((o.r[x], (1, 0)), (o.u[x], (0, 1))):
            q = pos[y]
            if q is None:
                pos[y] = (px + dx, py + dy)
                todo.append(y)
    for x in range(n):
        px, py = pos[x]
        for y, (dx, dy) in ((o.r[x], (1, 0)), (o.u[x], (0, 1))):
            qx, qy = pos[y]
            v = (px + dx - qx, py + dy - qy)
            if v != (0, 0):
                vecs.append(v)
    return hermite_basis(vecs)
