from fractions import Fraction
from math import gcd

import pytest

from h2origami.cylinders import OneCylCoords, TwoCylCoords, is_primitive
from h2origami.errors import BadN
from h2origami.formulas import (
    ASYMPTOTICS,
    PiMultiple,
    conjecture_orbit_totals,
    elliptic_conjecture,
    ems_total,
    is_prime,
    one_cyl_counts,
    prime_counts,
    prime_table,
    two_cyl_cusp_bound,
    two_cyl_exact_sums,
)
from h2origami.orbits import enumerate_coords
from h2origami.weierstrass import invariant_from_coords


def _naive_sums(n):
    """Direct count over (h1, h2, w1, w2, t1, t2) with the parity split."""
    S = S_oh = S_ow = 0
    for h1 in range(1, n + 1):
        for h2 in range(1, n + 1):
            for w1 in range(1, n + 1):
                for w2 in range(w1 + 1, n + 1):
                    if h1 * w1 + h2 * w2 != n:
                        continue
                    count = w1 * w2
                    S += count
                    if h1 % 2 and h2 % 2:
                        S_oh += count
                    elif w1 % 2 and w2 % 2:
                        S_ow += count
    return S, S_oh, S_ow


def _naive_cusp_bound(n):
    total = 0
    for h1 in range(1, n + 1):
        for h2 in range(1, n + 1):
            for w1 in range(1, n + 1):
                for w2 in range(w1 + 1, n + 1):
                    if h1 * w1 + h2 * w2 == n:
                        total += gcd(h1, w1) * gcd(h2, w2)
    return total


def _jordan(n):
    f = Fraction(n * n)
    for p in range(2, n + 1):
        if n % p == 0 and is_prime(p):
            f *= 1 - Fraction(1, p * p)
    return f


def test_is_prime():
    assert [p for p in range(40) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def test_two_cyl_sums_examples():
    s = two_cyl_exact_sums(5)
    assert (s.S, s.S_oh, s.S_ow, s.S_eo, s.A2, s.B2) == (17, 12, 3, 2, 13, 4)
    assert two_cyl_exact_sums(3).S == 2


@pytest.mark.parametrize("n", range(3, 40, 2))
def test_two_cyl_sums_against_naive(n):
    s = two_cyl_exact_sums(n)
    assert (s.S, s.S_oh, s.S_ow) == _naive_sums(n)
    assert s.S_eo == s.S - s.S_oh - s.S_ow
    assert s.A2 + s.B2 == s.S


def test_two_cyl_sums_even_n():
    with pytest.raises(BadN):
        two_cyl_exact_sums(6)


def test_two_cyl_sums_against_enumeration():
    for n in (5, 7, 11, 13):
        twos = [c for c in enumerate_coords(n) if isinstance(c, TwoCylCoords)]
        s = two_cyl_exact_sums(n)
        assert s.S == len(twos)
        assert s.A2 == sum(1 for c in twos if invariant_from_coords(c) == 1)
        assert s.B2 == sum(1 for c in twos if invariant_from_coords(c) == 3)


def test_cusp_bound():
    assert two_cyl_cusp_bound(3) >= 1
    assert two_cyl_cusp_bound(5) >= 6
    for n in range(3, 30):
        assert two_cyl_cusp_bound(n) == _naive_cusp_bound(n)


@pytest.mark.parametrize("n, total", [(3, 3), (4, 9), (5, 27)])
def test_ems_examples(n, total):
    assert ems_total(n) == total


def test_ems_against_enumeration():
    for n in range(3, 14):
        assert ems_total(n) == sum(1 for c in enumerate_coords(n) if is_primitive(c))


def test_ems_matches_jordan_formula():
    for n in range(3, 200):
        assert ems_total(n) == Fraction(3, 8) * (n - 2) * _jordan(n)


def test_conjecture_totals():
    assert conjecture_orbit_totals(5) == (18, 9)
    assert conjecture_orbit_totals(7) == (54, 36)
    for n in range(5, 100, 2):
        a, b = conjecture_orbit_totals(n)
        assert a + b == ems_total(n)
    with pytest.raises(BadN):
        conjecture_orbit_totals(8)


def test_one_cyl_counts():
    t = one_cyl_counts(5)
    assert [t[(o, "1-cyl", "surfaces")] for o in ("A", "B", "all")] == [5, 5, 10]
    assert [t[(o, "1-cyl", "cusps")] for o in ("A", "B", "all")] == [1, 1, 2]
    t = one_cyl_counts(7)
    assert [t[(o, "1-cyl", "surfaces")] for o in ("A", "B", "all")] == [14, 21, 35]
    assert [t[(o, "1-cyl", "cusps")] for o in ("A", "B", "all")] == [2, 3, 5]


def test_one_cyl_counts_against_enumeration():
    for n in (5, 7, 11, 13, 17):
        ones = [c for c in enumerate_coords(n) if isinstance(c, OneCylCoords)]
        t = one_cyl_counts(n)
        assert t[("all", "1-cyl", "surfaces")] == len(ones)
        assert t[("A", "1-cyl", "surfaces")] == sum(1 for c in ones if invariant_from_coords(c) == 1)


def test_prime_table_is_consistent():
    for n in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        poly = prime_table(n)
        exact = prime_counts(n)
        for key, value in poly.rows.items():
            assert exact[key] == value, (n, key)
        for cyl in ("1-cyl", "2-cyl", "all"):
            assert poly[("A", cyl, "surfaces")] + poly[("B", cyl, "surfaces")] == poly[("all", cyl, "surfaces")]
        assert poly[("all", "all", "surfaces")] == ems_total(n)
        assert (poly[("A", "all", "surfaces")], poly[("B", "all", "surfaces")]) == conjecture_orbit_totals(n)


def test_prime_table_needs_prime():
    with pytest.raises(BadN):
        prime_table(9)
    with pytest.raises(BadN):
        one_cyl_counts(3)


def test_elliptic_conjecture():
    assert elliptic_conjecture(3) == 1
    assert elliptic_conjecture(5) == 1
    assert elliptic_conjecture(13) == 3
    with pytest.raises(BadN):
        elliptic_conjecture(9)


def test_asymptotic_constants_are_symbolic():
    assert ASYMPTOTICS.orbit_size_coeff == PiMultiple(Fraction(3, 16))
    assert ASYMPTOTICS.genus_coeff == PiMultiple(Fraction(1, 64))
    assert (ASYMPTOTICS.zeta2.power, ASYMPTOTICS.zeta4.power) == (2, 4)
    assert str(ASYMPTOTICS.zeta4) == "1/90*pi^4"
    assert abs(float(ASYMPTOTICS.zeta2) - 1.6449340668) < 1e-9
