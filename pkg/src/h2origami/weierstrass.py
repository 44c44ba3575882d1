r"""
Integer Weierstrass points.

The number of Weierstrass points of a surface in H(2) that sit at vertices
of the square tiling (the saddle always does) is constant on
SL(2, Z)-orbits.  It is computed here twice:

- :func:`invariant_from_coords` reads it off cylinder coordinates in O(1);
- :func:`involution_oracle` finds the hyperelliptic involution on the
  squares themselves and counts its fixed points, in O(n^2).

Both are kept; the census uses the first and the verification suites
compare it against the second.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .cylinders import Coords, OneCylCoords, is_primitive
from .errors import BadPartition, NoInvolution, NotPrimitive
from .origami import Origami, Perm, corner_perm, perm_cycles, perm_inverse, validate_h2


def _core_points(h: int, w: int, twice_center: int) -> int:
    # The involution rotates a cylinder by pi about a point of its core
    # circle (height h/2) with abscissa x0, 2*x0 = twice_center (mod w); the
    # two fixed points are x0 and x0 + w/2.
    if h % 2:
        return 0
    if w % 2:
        return 1
    return 2 if twice_center % 2 == 0 else 0


def invariant_from_coords(c: Coords, check_primitive: bool = True) -> int:
    """Number of integer Weierstrass points, saddle included.

    For odd ``n`` this reproduces the parity table of the two-cylinder case
    (e.g. heights odd/even, ``l1`` and ``l2`` odd: 3 if ``t2`` is odd else 1).
    """
    if check_primitive and not is_primitive(c):
        raise NotPrimitive(f"{c} is not primitive")
    if isinstance(c, OneCylCoords):
        # all three connections bound the cylinder on both sides
        mids = sum(1 for x in c.lengths if x % 2 == 0)
        return 1 + mids + _core_points(c.height, c.width, c.t + c.a)
    mids = 1 if c.l2 % 2 == 0 else 0
    return (1 + mids
            + _core_points(c.h1, c.w1, c.t1)
            + _core_points(c.h2, c.w2, c.t2 + c.l1))


def orbit_label(invariant: int, n: int) -> str:
    """``A``/``B`` for odd ``n >= 5``, ``single`` for even ``n``."""
    if n % 2 == 0:
        return "single"
    if n == 3:
        return "other"
    return {1: "A", 3: "B"}.get(invariant, "other")


@dataclass(frozen=True)
class InvolutionData:
    tau: Perm  # square i is rotated by pi onto square tau[i]
    fixed_vertex_count: int
    fixed_midpoint_count: int
    fixed_center_count: int

    @property
    def total_fixed(self) -> int:
        return self.fixed_vertex_count + self.fixed_midpoint_count + self.fixed_center_count


def _propagate(r: Perm, u: Perm, rinv: Perm, uinv: Perm, j: int) -> list[int] | None:
    # rotation by pi swaps right/left and up/down neighbours
    n = len(r)
    tau = [-1] * n
    tau[0] = j
    todo = [0]
    while todo:
        x = todo.pop()
        tx = tau[x]
        for y, ty in ((r[x], rinv[tx]), (rinv[x], r[tx]), (u[x], uinv[tx]), (uinv[x], u[tx])):
            if tau[y] < 0:
                tau[y] = ty
                todo.append(y)
            elif tau[y] != ty:
                return None
    return tau


def find_involutions(o: Origami) -> list[Perm]:
    """All square maps compatible with a rotation by pi of the surface."""
    r, u = o.r, o.u
    rinv, uinv = perm_inverse(r), perm_inverse(u)
    found = []
    for j in range(o.n):
        tau = _propagate(r, u, rinv, uinv, j)
        if tau is not None:
            found.append(tuple(tau))
    return found


def involution_oracle(o: Origami) -> InvolutionData:
    """Hyperelliptic involution of ``o`` and its fixed points by kind."""
    validate_h2(o)
    found = find_involutions(o)
    if len(found) != 1:
        raise NoInvolution(f"expected exactly one involution, found {len(found)}")
    tau = found[0]
    r, u = o.r, o.u
    centers = sum(1 for i in range(o.n) if tau[i] == i)
    # bottom edge of i goes to the top edge of tau(i), i.e. bottom edge of u(tau(i))
    mids = sum(1 for i in range(o.n) if u[tau[i]] == i)
    mids += sum(1 for i in range(o.n) if r[tau[i]] == i)
    # bottom-left corner of i goes to the top-right corner of tau(i)
    vertex_of = [0] * o.n
    for k, cyc in enumerate(perm_cycles(corner_perm(o))):
        for i in cyc:
            vertex_of[i] = k
    fixed_vertices = {vertex_of[i] for i in range(o.n) if vertex_of[r[u[tau[i]]]] == vertex_of[i]}
    return InvolutionData(tau, len(fixed_vertices), mids, centers)


class HypStratum(enum.Enum):
    MINIMAL = "H(2g-2)^hyp"
    PAIRED = "H(g-1,g-1)^hyp"


def appendix_b_invariant(lengths: Sequence[int], stratum: HypStratum | str, genus: int | None = None) -> int:
    """Number of even saddle connections of a one-cylinder surface in a
    hyperelliptic component (``2g - 1`` connections in ``H(2g-2)``, ``2g``
    in ``H(g-1, g-1)``)."""
    stratum = HypStratum(stratum)
    k = len(lengths)
    if any(x < 1 for x in lengths):
        raise BadPartition(f"lengths must be positive: {lengths}")
    if stratum is HypStratum.MINIMAL:
        ok = k >= 3 and k % 2 == 1 and (genus is None or k == 2 * genus - 1)
    else:
        ok = k >= 4 and k % 2 == 0 and (genus is None or k == 2 * genus)
    if not ok:
        raise BadPartition(f"{k} saddle connections do not fit {stratum.value}")
    return sum(1 for x in lengths if x % 2 == 0)
