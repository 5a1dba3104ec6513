from __future__ import annotations

import pytest

from sandwich.carving import (NotExtremityError, carve, check_fact_4_2, property_three_holds,
                              restrict)
from sandwich.exactvec import HalfVec, dot
from sandwich.rootsys import build, SimpleType

from conftest import all_extremity_cases, carving_of, rs_of

CASES = all_extremity_cases()


def test_a2_node1():
    c = carving_of("A", 2, 1)
    assert c.h_star_coeffs == (2, 1)
    assert c.h_star == HalfVec.from_coords([2, -1, -1])
    assert {str(r) for r in c.Rminus} == {"-e1 + e2", "-e1 + e3"}


@pytest.mark.parametrize("family, rank, L, hstar, count", [
    ("F", 4, 4, (2, 0, 0, 0), 15),
    ("G", 2, 1, (-4, -5, -3), 5),
    ("E", 8, 1, (0, 0, 0, 0, 0, 0, 0, 2), 78),
    ("G", 2, 2, (-3, -3, -2), 5),
])
def test_hstar_and_counts(family, rank, L, hstar, count):
    c = carving_of(family, rank, L)
    assert c.h_star == HalfVec.from_coords(hstar)
    assert len(c.Rminus) == count


@pytest.mark.parametrize("case", CASES, ids=lambda c: f"{c[0]}{c[1]}-{c[2]}")
def test_carving_invariants(case):
    c = carving_of(*case)
    rs = c.parent
    for i, a in enumerate(rs.simple_roots, start=1):
        v = dot(a, c.h_star)
        assert v > 0 if i == c.L else v == 0
    assert set(c.R0) | set(c.Rminus) | set(c.Rplus) == set(rs.all_roots)
    assert len(c.R0) + len(c.Rminus) + len(c.Rplus) == len(rs.all_roots)
    assert {-r for r in c.Rminus} == set(c.Rplus)
    assert len(c.R0) == len(build(c.g_type).all_roots)
    assert check_fact_4_2(c)
    assert sum(len(h.members) for h in restrict(c)) == len(c.Rminus)


@pytest.mark.parametrize("case", CASES, ids=lambda c: f"{c[0]}{c[1]}-{c[2]}")
def test_r0_is_generated_by_retained_simple_roots(case):
    c = carving_of(*case)
    rs = c.parent
    from sandwich.rootsys import positive_roots_by_strings
    from sandwich.exactvec import delete_row_col
    retained = [a for i, a in enumerate(rs.simple_roots, 1) if i != c.L]
    sub = set()
    for ks in positive_roots_by_strings(delete_row_col(rs.cartan, c.L)):
        v = HalfVec.zero(rs.ambient_dim)
        for k, a in zip(ks, retained):
            v = v + a.scale(k)
        sub |= {v, -v}
    assert sub == set(c.R0)


def test_fact_4_2_example_e8_node2():
    c = carving_of("E", 8, 2)
    r = HalfVec.from_coords([-1, -1, 0, 0, 0, 0, 0, 0])
    assert r in c.Rminus
    assert c.parent.simple_coefficients(r)[1] == -1


def test_a2_expansion():
    rs = rs_of("A", 2)
    assert rs.simple_coefficients(HalfVec.from_coords([-1, 0, 1])) == (-1, -1)


def test_restrict_examples():
    g = restrict(carving_of("G", 2, 1))
    assert sorted(len(h.members) for h in g) == [1, 2, 2]
    zero = [h for h in g if not any(h.representative_functional)]
    assert len(zero) == 1 and len(zero[0].members) == 1
    for rank, size in ((3, 5), (4, 7)):
        b = restrict(carving_of("B", rank, 1))
        assert len(b) == size and all(len(h.members) == 1 for h in b)
        assert any(not any(h.representative_functional) for h in b)
    assert len(restrict(carving_of("A", 2, 1))) == 2


@pytest.mark.parametrize("case, expected", [
    (("B", 3, 3), True), (("G", 2, 1), False), (("A", 2, 1), True),
])
def test_property_three(case, expected):
    assert property_three_holds(carving_of(*case)) is expected


def test_only_g2_node1_collides():
    bad = [case for case in CASES if not property_three_holds(carving_of(*case))]
    assert bad == [("G", 2, 1)]


def test_non_extremity_rejected():
    with pytest.raises(NotExtremityError, match="not an extremity"):
        carve(rs_of("A", 3), 2)
    with pytest.raises(ValueError):
        carve(rs_of("A", 3), 9)


def test_non_extremity_diagnostic_mode():
    c = carve(rs_of("A", 3), 2, allow_non_extremity=True)
    assert c.g_type is None
    assert len(c.Rminus) == 4


def test_carve_deterministic():
    a = carve(build(SimpleType("E", 7)), 2)
    b = carve(build(SimpleType("E", 7)), 2)
    assert a.Rminus == b.Rminus and a.h_star == b.h_star and restrict(a) == restrict(b)
