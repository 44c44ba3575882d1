from collections import Counter

import pytest

from h2origami.cylinders import (
    OneCylCoords,
    SeparatrixDiagram,
    TwoCylCoords,
    apply_U_coords,
    canonical_cusp_representative,
    cusp_width,
    decompose,
    is_primitive,
    l_shaped,
    parse_coords,
    period_lattice_from_coords,
    to_origami,
)
from h2origami.errors import BadN, InvalidCoords, NotPrimitive, ParseError, WrongStratum
from h2origami.orbits import enumerate_coords, orbit_bfs
from h2origami.origami import Generator, Origami, act_generator, canonical_key, period_lattice
from h2origami.verify import u_orbit_size
from h2origami.weierstrass import invariant_from_coords


def test_round_trip(coords_by_n):
    for cs in coords_by_n.values():
        for c in cs:
            assert decompose(to_origami(c)).coords == c


def test_round_trip_named_example():
    c = TwoCylCoords(1, 1, 1, 4, 0, 2)
    d = decompose(to_origami(c))
    assert d.diagram is SeparatrixDiagram.TWO_CYLINDER
    assert d.num_cylinders == 2
    assert d.coords == c


def test_decompose_is_relabelling_invariant(coords_by_n):
    for c in coords_by_n[9]:
        o = to_origami(c)
        p = list(range(o.n))[::-1]
        assert decompose(o.relabel(p)).coords == c


def test_V_of_one_cylinder_n3():
    o = act_generator(to_origami(OneCylCoords(1, 1, 1, 0)), Generator.V)
    c = decompose(o).coords
    assert isinstance(c, TwoCylCoords)
    assert (c.heights, c.widths) == ((1, 1), (1, 2))


def test_decompose_rejects_other_strata():
    with pytest.raises(WrongStratum):
        decompose(Origami((1, 2, 0), (0, 1, 2)))


def test_U_acts_on_twists(coords_by_n):
    # permutation-level U agrees with the coordinate rule t_i -> t_i + h_i
    for n in range(3, 11):
        for c in coords_by_n[n]:
            image = decompose(act_generator(to_origami(c), Generator.U)).coords
            assert image == apply_U_coords(c)
            back = decompose(act_generator(to_origami(c), Generator.U_inv)).coords
            assert back == apply_U_coords(c, -1)


def test_apply_U_examples():
    c = TwoCylCoords(1, 1, 1, 4, 0, 0)
    assert apply_U_coords(c, 0) == c
    assert apply_U_coords(c, 2).twists == (0, 2)


def test_n5_cylinder_split(coords_by_n):
    kinds = Counter(type(c).__name__ for c in coords_by_n[5])
    assert kinds == {"OneCylCoords": 10, "TwoCylCoords": 17}


def test_to_origami_examples():
    assert to_origami(OneCylCoords(1, 1, 1, 0)).n == 3
    o = to_origami(TwoCylCoords(1, 1, 1, 2, 0, 0))
    assert o.n == 3
    assert decompose(o).num_cylinders == 2


@pytest.mark.parametrize("bad", [
    TwoCylCoords(1, 1, 2, 2, 0, 0),
    TwoCylCoords(1, 1, 3, 2, 0, 0),
    TwoCylCoords(0, 1, 1, 2, 0, 0),
    TwoCylCoords(1, 1, 1, 2, 1, 0),
    TwoCylCoords(1, 1, 1, 2, 0, 2),
    OneCylCoords(0, 1, 1, 0),
    OneCylCoords(1, 1, 1, 3),
    OneCylCoords(1, 1, 1, 0, 0),
])
def test_invalid_coords(bad):
    with pytest.raises(InvalidCoords):
        to_origami(bad)


def test_lattice_from_coords_matches_permutations(coords_by_n):
    for cs in coords_by_n.values():
        for c in cs:
            assert period_lattice_from_coords(c) == period_lattice(to_origami(c))


# --- cusps ------------------------------------------------------------------

def test_cusp_width_examples():
    assert cusp_width(TwoCylCoords(1, 1, 1, 4, 0, 0)) == 4
    assert cusp_width(TwoCylCoords(1, 2, 1, 2, 0, 0)) == 1
    for n in (5, 7, 11):
        for c in enumerate_coords(n):
            if isinstance(c, OneCylCoords):
                assert cusp_width(c) == n


def test_cusp_width_needs_primitive():
    with pytest.raises(NotPrimitive):
        cusp_width(TwoCylCoords(1, 1, 2, 4, 0, 0))


def test_cusp_width_against_u_orbit(coords_by_n):
    for n, cs in coords_by_n.items():
        for c in cs:
            if is_primitive(c):
                assert cusp_width(c) == u_orbit_size(c), c


def test_n5_cusp_widths():
    # one representative per U-orbit
    reps = {canonical_cusp_representative(c) for c in enumerate_coords(5)}
    assert sorted(cusp_width(c) for c in reps) == [1, 1, 2, 3, 4, 5, 5, 6]


def test_canonical_cusp_representative_examples():
    assert canonical_cusp_representative(TwoCylCoords(1, 1, 1, 4, 0, 3)).twists == (0, 0)
    assert canonical_cusp_representative(TwoCylCoords(1, 2, 1, 2, 0, 1)).twists == (0, 1)


def test_canonical_cusp_representative_is_u_invariant(coords_by_n):
    for n in range(3, 13):
        for c in coords_by_n[n]:
            if not is_primitive(c):
                continue
            rep = canonical_cusp_representative(c)
            assert canonical_cusp_representative(apply_U_coords(c)) == rep
            # the representative lies in the same U-orbit
            orbit = {apply_U_coords(c, k) for k in range(cusp_width(c))}
            assert rep in orbit


def test_noncoprime_periods_need_orbit_minimum():
    # periods 2 and 2 are not coprime: (0, 1) and (0, 0) are in different cusps
    c = TwoCylCoords(1, 1, 2, 6, 0, 1)
    assert cusp_width(c, check_primitive=False) == 6
    assert canonical_cusp_representative(c) != canonical_cusp_representative(TwoCylCoords(1, 1, 2, 6, 0, 0))


def test_l_shaped():
    s1, s2 = l_shaped(13, "S1"), l_shaped(13, "S2")
    assert (s1.heights, s1.widths) == ((1, 1), (1, 12))
    assert (s2.heights, s2.widths) == ((2, 1), (1, 11))
    assert invariant_from_coords(s1) == 1
    assert invariant_from_coords(s2) == 3
    assert len(orbit_bfs(to_origami(l_shaped(5, "S1")))) == 18
    assert len(orbit_bfs(to_origami(l_shaped(5, "S2")))) == 9
    with pytest.raises(BadN):
        l_shaped(9, "S1")
    with pytest.raises(BadN):
        l_shaped(3, "S2")


# --- text form --------------------------------------------------------------

@pytest.mark.parametrize("c", [
    OneCylCoords(1, 1, 3, 2),
    OneCylCoords(1, 1, 1, 0, 2),
    TwoCylCoords(1, 2, 1, 4, 0, 3),
])
def test_parse_round_trip(c):
    assert parse_coords(str(c)) == c


@pytest.mark.parametrize("bad", ["onecyl:1,1:0", "twocyl:1,1,1,2,0", "torus:1", "onecyl:a,b,c:0", ""])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_coords(bad)


def test_one_cylinder_canonical_rotation():
    c = OneCylCoords(3, 1, 1, 0)
    k = canonical_key(to_origami(c))
    assert canonical_key(to_origami(c.canonical())) == k
    assert c.canonical().lengths == (1, 1, 3)
