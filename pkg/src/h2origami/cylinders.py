r"""
Cylinder coordinates for surfaces in H(2).

Every square-tiled surface in H(2) splits horizontally into one or two
maximal cylinders.

One cylinder (:class:`OneCylCoords`)
    The bottom of the cylinder carries three saddle connections of lengths
    ``a, b, c`` in this cyclic order, starting at ``x = 0``; the top carries
    them in the reverse cyclic order ``a, c, b``, with the left end of ``a``
    at ``x = t``.  Rotating the labels ``(a, b, c) -> (b, c, a)`` turns ``t``
    into ``t + c``; the stored triple is the least rotation.

Two cylinders (:class:`TwoCylCoords`)
    With ``gamma_pi, gamma_3pi, gamma_5pi`` the connections named after
    their return angles and ``l1 = |gamma_pi| = |gamma_5pi|``,
    ``l2 = |gamma_3pi|``: cylinder 1 (width ``w1 = l1``) has ``gamma_pi`` on
    its bottom and ``gamma_5pi`` on its top; cylinder 2 (width
    ``w2 = l1 + l2``) has ``gamma_5pi, gamma_3pi`` on its bottom and
    ``gamma_pi, gamma_3pi`` on its top.  Bottoms start at ``x = 0`` with
    ``gamma_pi`` resp. ``gamma_5pi``; ``t1`` is the position of the left end
    of ``gamma_5pi`` on top of cylinder 1 and ``t2`` that of ``gamma_pi`` on
    top of cylinder 2.

In both cases the shear ``U`` adds the height of each cylinder to its twist.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, replace
from math import gcd, lcm
from typing import Union

from .errors import InvalidCoords, NotPrimitive, ParseError, BadN
from .origami import (
    LatticeBasis,
    Origami,
    cone_squares,
    hermite_basis,
    perm_cycles,
    perm_inverse,
    validate_h2,
)


class SeparatrixDiagram(enum.Enum):
    """The two horizontal separatrix diagrams realisable in H(2)."""

    ONE_CYLINDER = (3, 3, 3)  # return angles, in units of pi
    TWO_CYLINDER = (1, 3, 5)


@dataclass(frozen=True, order=True)
class OneCylCoords:
    a: int
    b: int
    c: int
    t: int
    height: int = 1

    @property
    def width(self) -> int:
        return self.a + self.b + self.c

    @property
    def n(self) -> int:
        return self.height * self.width

    @property
    def lengths(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    def check(self) -> None:
        if min(self.a, self.b, self.c) < 1 or self.height < 1:
            raise InvalidCoords(f"{self}: lengths and height must be positive")
        if not 0 <= self.t < self.width:
            raise InvalidCoords(f"{self}: twist must lie in [0, {self.width})")

    def canonical(self) -> "OneCylCoords":
        """Least rotation of the triple, twist moved along."""
        self.check()
        a, b, c, t, w = self.a, self.b, self.c, self.t, self.width
        rots = [(a, b, c, t), (b, c, a, (t + c) % w), (c, a, b, (t + c + a) % w)]
        return OneCylCoords(*min(rots), height=self.height)

    @property
    def twist_period(self) -> int:
        """Number of distinct twists: ``w``, or ``w / 3`` for equal lengths."""
        return self.a if self.a == self.b == self.c else self.width

    def __str__(self):
        s = f"onecyl:{self.a},{self.b},{self.c}:{self.t}"
        return s if self.height == 1 else f"{s}:{self.height}"


@dataclass(frozen=True, order=True)
class TwoCylCoords:
    h1: int
    h2: int
    w1: int
    w2: int
    t1: int
    t2: int

    @property
    def l1(self) -> int:
        return self.w1

    @property
    def l2(self) -> int:
        return self.w2 - self.w1

    @property
    def n(self) -> int:
        return self.h1 * self.w1 + self.h2 * self.w2

    @property
    def heights(self) -> tuple[int, int]:
        return self.h1, self.h2

    @property
    def widths(self) -> tuple[int, int]:
        return self.w1, self.w2

    @property
    def twists(self) -> tuple[int, int]:
        return self.t1, self.t2

    def check(self) -> None:
        if min(self.h1, self.h2, self.w1) < 1:
            raise InvalidCoords(f"{self}: heights and widths must be positive")
        if not self.w1 < self.w2:
            raise InvalidCoords(f"{self}: need w1 < w2")
        if not (0 <= self.t1 < self.w1 and 0 <= self.t2 < self.w2):
            raise InvalidCoords(f"{self}: twists out of range")

    def canonical(self) -> "TwoCylCoords":
        self.check()
        return self

    def __str__(self):
        return "twocyl:" + ",".join(map(str, (self.h1, self.h2, self.w1, self.w2, self.t1, self.t2)))


Coords = Union[OneCylCoords, TwoCylCoords]


@dataclass(frozen=True)
class CylinderDecomposition:
    diagram: SeparatrixDiagram
    coords: Coords

    @property
    def num_cylinders(self) -> int:
        return 1 if self.diagram is SeparatrixDiagram.ONE_CYLINDER else 2


_ONE_RE = re.compile(r"^onecyl:(\d+),(\d+),(\d+):(\d+)(?::(\d+))?$")
_TWO_RE = re.compile(r"^twocyl:(\d+),(\d+),(\d+),(\d+),(\d+),(\d+)$")


def parse_coords(s: str) -> Coords:
    """Parse ``onecyl:a,b,c:t[:h]`` or ``twocyl:h1,h2,w1,w2,t1,t2``."""
    s = s.strip().replace(" ", "")
    m = _ONE_RE.match(s)
    if m:
        a, b, c, t = map(int, m.groups()[:4])
        h = int(m.group(5)) if m.group(5) else 1
        return OneCylCoords(a, b, c, t, h)
    m = _TWO_RE.match(s)
    if m:
        return TwoCylCoords(*map(int, m.groups()))
    raise ParseError(f"cannot parse cylinder coordinates {s!r}")


# ---------------------------------------------------------------------------
# coordinates -> permutations
# ---------------------------------------------------------------------------

def _cylinder_squares(offset: int, h: int, w: int) -> list[list[int]]:
    return [[offset + y * w + x for x in range(w)] for y in range(h)]


def to_origami(c: Coords) -> Origami:
    """Glue the cylinders of ``c`` into a permutation pair.

    Squares are numbered row by row from the bottom-left of cylinder 1
    (the narrow one), then cylinder 2.
    """
    c.check()
    if isinstance(c, OneCylCoords):
        a, b, cc, t, h, w = c.a, c.b, c.c, c.t, c.height, c.width
        n = h * w
        sq = _cylinder_squares(0, h, w)
        r = [0] * n
        u = [0] * n
        for y in range(h):
            for x in range(w):
                r[sq[y][x]] = sq[y][(x + 1) % w]
                if y + 1 < h:
                    u[sq[y][x]] = sq[y + 1][x]
        for x in range(w):
            d = (x - t) % w
            if d < a:
                bx = d
            elif d < a + cc:
                bx = a + b + (d - a)
            else:
                bx = a + (d - a - cc)
            u[sq[h - 1][x]] = sq[0][bx]
        return Origami(tuple(r), tuple(u))

    h1, h2, w1, w2, t1, t2 = c.h1, c.h2, c.w1, c.w2, c.t1, c.t2
    n = c.n
    s1 = _cylinder_squares(0, h1, w1)
    s2 = _cylinder_squares(h1 * w1, h2, w2)
    r = [0] * n
    u = [0] * n
    for sq, h, w in ((s1, h1, w1), (s2, h2, w2)):
        for y in range(h):
            for x in range(w):
                r[sq[y][x]] = sq[y][(x + 1) % w]
                if y + 1 < h:
                    u[sq[y][x]] = sq[y + 1][x]
    for x in range(w1):
        u[s1[h1 - 1][x]] = s2[0][(x - t1) % w1]
    for x in range(w2):
        d = (x - t2) % w2
        u[s2[h2 - 1][x]] = s1[0][d] if d < w1 else s2[0][d]
    return Origami(tuple(r), tuple(u))


# ---------------------------------------------------------------------------
# permutations -> coordinates
# ---------------------------------------------------------------------------

def decompose(o: Origami) -> CylinderDecomposition:
    """Horizontal cylinder decomposition of an H(2) origami, in canonical coordinates."""
    validate_h2(o)
    r, u = o.r, o.u
    uinv = perm_inverse(u)
    cone = set(cone_squares(o))
    row_of = [0] * o.n
    rows = perm_cycles(r)
    for k, row in enumerate(rows):
        for i in row:
            row_of[i] = k
    marked = {row_of[i] for i in cone}

    # climb from each bottom row until the next marked row
    cyl_of = [-1] * o.n
    cyls = []  # (bottom row index, height, width)
    for k in sorted(marked):
        h = 0
        x = rows[k][0]
        while True:
            for i in rows[row_of[x]]:
                cyl_of[i] = len(cyls)
            h += 1
            x = u[x]
            if row_of[x] in marked:
                break
        cyls.append((k, h, len(rows[k])))

    def walk(b0: int, w: int) -> list[int]:
        out = [b0]
        for _ in range(w - 1):
            out.append(r[out[-1]])
        return out

    def top_of(b0: int, h: int, w: int) -> list[int]:
        res = []
        for s in walk(b0, w):
            for _ in range(h):
                s = u[s]
            res.append(s)
        return res

    if len(cyls) == 1:
        k, h, w = cyls[0]
        cands = []
        for b0 in cone:
            line = walk(b0, w)
            marks = [x for x, s in enumerate(line) if s in cone]
            a, b = marks[1], marks[2] - marks[1]
            cc = w - marks[2]
            t = top_of(b0, h, w).index(b0)
            cands.append((a, b, cc, t))
        a, b, cc, t = min(cands)
        return CylinderDecomposition(SeparatrixDiagram.ONE_CYLINDER, OneCylCoords(a, b, cc, t, h))

    if len(cyls) != 2:
        raise AssertionError(f"{len(cyls)} horizontal cylinders in H(2)")
    in_row = [[i for i in cone if row_of[i] == k] for k, _, _ in cyls]
    narrow = 0 if len(in_row[0]) == 1 else 1
    wide = 1 - narrow
    (_, h1, w1), (_, h2, w2) = cyls[narrow], cyls[wide]
    b0_narrow = in_row[narrow][0]
    b0_wide = next(m for m in in_row[wide] if cyl_of[uinv[m]] == narrow)
    t1 = top_of(b0_narrow, h1, w1).index(b0_wide)
    t2 = top_of(b0_wide, h2, w2).index(b0_narrow)
    return CylinderDecomposition(SeparatrixDiagram.TWO_CYLINDER, TwoCylCoords(h1, h2, w1, w2, t1, t2))


# ---------------------------------------------------------------------------
# periods, U action, cusps
# ---------------------------------------------------------------------------

def period_lattice_from_coords(c: Coords) -> LatticeBasis:
    """HNF basis of the lattice spanned by the edge vectors of the octagon."""
    if isinstance(c, OneCylCoords):
        return hermite_basis([(c.a, 0), (c.b, 0), (c.c, 0), (c.t, c.height)])
    return hermite_basis([(c.l1, 0), (c.l2, 0), (c.t1, c.h1), (c.t2, c.h2)])


def is_primitive(c: Coords) -> bool:
    return period_lattice_from_coords(c).is_primitive


def apply_U_coords(c: Coords, k: int = 1) -> Coords:
    """Coordinates of ``U^k`` applied to ``c``: twists move by ``k * height``."""
    if isinstance(c, OneCylCoords):
        return replace(c, t=(c.t + k * c.height) % c.width).canonical()
    return replace(c, t1=(c.t1 + k * c.h1) % c.w1, t2=(c.t2 + k * c.h2) % c.w2)


def cusp_width(c: Coords, check_primitive: bool = True) -> int:
    """Size of the ``U``-orbit of the surface with coordinates ``c``."""
    if check_primitive and not is_primitive(c):
        raise NotPrimitive(f"{c} is not primitive")
    if isinstance(c, OneCylCoords):
        m = c.twist_period
        return m // gcd(m, c.height)
    return lcm(c.w1 // gcd(c.w1, c.h1), c.w2 // gcd(c.w2, c.h2))


def canonical_cusp_representative(c: Coords) -> Coords:
    """Least twists (lexicographically) in the ``U``-orbit of ``c``.

    When the two cylinder periods are coprime, every pair of residues is
    reached and this is ``t_i mod gcd(w_i, h_i)``.
    """
    if isinstance(c, OneCylCoords):
        c = c.canonical()
        m = c.twist_period
        return replace(c, t=c.t % gcd(m, c.height))
    g1, g2 = gcd(c.w1, c.h1), gcd(c.w2, c.h2)
    if gcd(c.w1 // g1, c.w2 // g2) == 1:
        return replace(c, t1=c.t1 % g1, t2=c.t2 % g2)
    width = cusp_width(c, check_primitive=False)
    return min((apply_U_coords(c, k) for k in range(width)), key=lambda d: (d.t1, d.t2))


def l_shaped(n: int, which: str) -> TwoCylCoords:
    """Zero-twist L-shaped surfaces: ``S1`` lies in orbit A, ``S2`` in orbit B."""
    from .formulas import is_prime

    if n <= 3 or not is_prime(n):
        raise BadN(f"L-shaped representatives need a prime n > 3, got {n}")
    if which == "S1":
        return TwoCylCoords(1, 1, 1, n - 1, 0, 0)
    if which == "S2":
        return TwoCylCoords(2, 1, 1, n - 2, 0, 0)
    raise ValueError(f"which must be 'S1' or 'S2', not {which!r}")
