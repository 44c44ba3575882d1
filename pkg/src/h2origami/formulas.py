r"""
Closed-form counts for primitive square-tiled surfaces in H(2).

Everything here is exact integer or :class:`~fractions.Fraction`
arithmetic.  Each formula carries a status:

- ``proved``: exact counts established for prime ``n`` (one-cylinder
  surfaces and cusps, the two-cylinder sums and their orbit split, the
  two-cylinder cusp sum);
- ``table``: the cubic polynomials for prime ``n`` obtained by restricting
  the orbit-size formulas to primes;
- ``conjecture``: the orbit-size formulas for general odd ``n`` and the
  elliptic point count ``floor((n + 1) / 4)``.

Asymptotic constants are kept for reporting only (:data:`ASYMPTOTICS`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import BadN


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def prime_divisors(n: int) -> list[int]:
    ps = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            ps.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        ps.append(n)
    return ps


def _jordan_factor(n: int) -> Fraction:
    """``prod_{p | n} (1 - 1/p^2)``."""
    f = Fraction(1)
    for p in prime_divisors(n):
        f *= 1 - Fraction(1, p * p)
    return f


def _exact(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"formula value {x} is not an integer")
    return x.numerator


def _need_prime(n: int, lo: int = 5) -> None:
    if n < lo or not is_prime(n):
        raise BadN(f"expected a prime n >= {lo}, got {n}")


# ---------------------------------------------------------------------------
# count tables
# ---------------------------------------------------------------------------

ORBITS = ("A", "B", "all")
CYLINDERS = ("1-cyl", "2-cyl", "all")
KINDS = ("surfaces", "cusps")


@dataclass
class CountTable:
    """Counts keyed by ``(orbit, cylinder class, kind)``.

    A value of ``None`` marks an entry known only asymptotically.
    """

    n: int
    rows: dict[tuple[str, str, str], int | None] = field(default_factory=dict)

    def __getitem__(self, key):
        return self.rows[key]

    def exact_items(self):
        return {k: v for k, v in self.rows.items() if v is not None}


def one_cyl_counts(n: int) -> CountTable:
    """One-cylinder surfaces and cusps per orbit, prime ``n > 3``."""
    _need_prime(n)
    cusps = {
        "A": (n - 1) * (n + 1) // 24,
        "B": (n - 1) * (n - 3) // 8,
        "all": (n - 1) * (n - 2) // 6,
    }
    t = CountTable(n)
    for orb, c in cusps.items():
        t.rows[(orb, "1-cyl", "cusps")] = c
        t.rows[(orb, "1-cyl", "surfaces")] = n * c
    return t


@dataclass(frozen=True)
class TwoCylSums:
    S: int
    S_oh: int
    S_ow: int
    S_eo: int
    A2: int
    B2: int


def _two_cyl_tuples(n: int):
    # heights a, b and widths k < l with a*k + b*l = n
    for a in range(1, n + 1):
        for k in range(1, n // a + 1):
            rest = n - a * k
            if rest <= 0:
                break
            for b in range(1, rest + 1):
                if rest % b == 0:
                    l = rest // b
                    if k < l:
                        yield a, b, k, l


def two_cyl_exact_sums(n: int) -> TwoCylSums:
    """Twist counts of two-cylinder surfaces, split by height/width parity.

    ``S_oh`` (both heights odd) lies in orbit A, ``S_ow`` (both widths odd)
    in orbit B, and the mixed remainder ``S_eo`` splits evenly by twist
    parity.
    """
    if n % 2 == 0 or n < 3:
        raise BadN(f"two_cyl_exact_sums needs odd n >= 3, got {n}")
    S = S_oh = S_ow = 0
    for a, b, k, l in _two_cyl_tuples(n):
        S += k * l
        if a % 2 and b % 2:
            S_oh += k * l
        elif k % 2 and l % 2:
            S_ow += k * l
    S_eo = S - S_oh - S_ow
    if S_eo % 2:
        raise ArithmeticError(f"odd mixed-parity sum {S_eo} at n={n}")
    return TwoCylSums(S, S_oh, S_ow, S_eo, S_oh + S_eo // 2, S_ow + S_eo // 2)


def two_cyl_cusp_bound(n: int) -> int:
    """``sum (a ^ k)(b ^ l)``: exact two-cylinder cusp count for prime ``n``,
    an upper bound otherwise."""
    if n < 3:
        raise BadN(f"n must be >= 3, got {n}")
    return sum(gcd(a, k) * gcd(b, l) for a, b, k, l in _two_cyl_tuples(n))


def ems_total(n: int) -> int:
    """Number of primitive ``n``-square-tiled surfaces in H(2)."""
    if n < 3:
        raise BadN(f"n must be >= 3, got {n}")
    return _exact(Fraction(3, 8) * (n - 2) * n * n * _jordan_factor(n))


def conjecture_orbit_totals(n: int) -> tuple[int, int]:
    """Conjectured sizes of orbits A and B for odd ``n >= 5``."""
    if n < 5 or n % 2 == 0:
        raise BadN(f"expected odd n >= 5, got {n}")
    f = Fraction(3, 16) * n * n * _jordan_factor(n)
    return _exact(f * (n - 1)), _exact(f * (n - 3))


def prime_table(n: int) -> CountTable:
    """The nine cubic polynomials for prime ``n`` (surfaces only)."""
    _need_prime(n)
    polys = {
        ("A", "1-cyl"): (Fraction(1, 24), (1, 0, -1, 0)),
        ("A", "2-cyl"): (Fraction(1, 48), (7, -9, -7, 9)),
        ("A", "all"): (Fraction(3, 16), (1, -1, -1, 1)),
        ("B", "1-cyl"): (Fraction(1, 8), (1, -4, 3, 0)),
        ("B", "2-cyl"): (Fraction(1, 16), (1, -1, -9, 9)),
        ("B", "all"): (Fraction(3, 16), (1, -3, -1, 3)),
        # printed as n^3 + 3n^2 + 2n; the sum of the A and B rows is n^3 - 3n^2 + 2n
        ("all", "1-cyl"): (Fraction(1, 6), (1, -3, 2, 0)),
        ("all", "2-cyl"): (Fraction(1, 24), (5, -6, -17, 18)),
        ("all", "all"): (Fraction(3, 8), (1, -2, -1, 2)),
    }
    t = CountTable(n)
    for (orb, cyl), (coef, (c3, c2, c1, c0)) in polys.items():
        t.rows[(orb, cyl, "surfaces")] = _exact(coef * (c3 * n**3 + c2 * n**2 + c1 * n + c0))
    return t


def prime_counts(n: int) -> CountTable:
    """Every exactly known count for prime ``n >= 5``."""
    t = one_cyl_counts(n)
    s = two_cyl_exact_sums(n)
    t.rows[("A", "2-cyl", "surfaces")] = s.A2
    t.rows[("B", "2-cyl", "surfaces")] = s.B2
    t.rows[("all", "2-cyl", "surfaces")] = s.S
    for orb in ORBITS:
        t.rows[(orb, "all", "surfaces")] = t[(orb, "1-cyl", "surfaces")] + t[(orb, "2-cyl", "surfaces")]
    t.rows[("A", "2-cyl", "cusps")] = None
    t.rows[("B", "2-cyl", "cusps")] = None
    t.rows[("all", "2-cyl", "cusps")] = two_cyl_cusp_bound(n)
    t.rows[("A", "all", "cusps")] = None
    t.rows[("B", "all", "cusps")] = None
    t.rows[("all", "all", "cusps")] = t[("all", "1-cyl", "cusps")] + t[("all", "2-cyl", "cusps")]
    return t


def elliptic_conjecture(n: int) -> int:
    """Conjectured number of elliptic points for prime ``n``."""
    if not is_prime(n):
        raise BadN(f"expected a prime, got {n}")
    return (n + 1) // 4


# ---------------------------------------------------------------------------
# asymptotic reference constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PiMultiple:
    """``coeff * pi**power``, kept symbolic."""

    coeff: Fraction
    power: int = 0

    def __float__(self):
        from math import pi

        return float(self.coeff) * pi**self.power

    def __str__(self):
        if self.power == 0:
            return str(self.coeff)
        return f"{self.coeff}*pi^{self.power}"


@dataclass(frozen=True)
class AsymptoticConstants:
    genus_coeff: PiMultiple = PiMultiple(Fraction(3, 16) * Fraction(1, 12))
    area_coeff: PiMultiple = PiMultiple(Fraction(3, 16) * Fraction(1, 3), 1)
    cusp_coeffs: tuple[PiMultiple, PiMultiple] = (PiMultiple(Fraction(1, 24)), PiMultiple(Fraction(1, 8)))
    two_cyl_surface_coeff: PiMultiple = PiMultiple(Fraction(5, 4) * Fraction(1, 6))
    split_coeffs: tuple[PiMultiple, PiMultiple] = (
        PiMultiple(Fraction(7, 8) * Fraction(1, 6)),
        PiMultiple(Fraction(3, 8) * Fraction(1, 6)),
    )
    orbit_size_coeff: PiMultiple = PiMultiple(Fraction(3, 16))
    zeta2: PiMultiple = PiMultiple(Fraction(1, 6), 2)
    zeta4: PiMultiple = PiMultiple(Fraction(1, 90), 4)

    @property
    def mean_order_factor(self) -> str:
        """Counts at prime ``n`` are ``1/zeta(4)`` times the mean order."""
        return f"1/({self.zeta4})"


ASYMPTOTICS = AsymptoticConstants()
