from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tavoid.exactnum import (
    IntervalSet,
    Poly,
    count_roots,
    format_rational,
    isolate_roots,
    poly_eval,
    poly_from_factors,
    rational_roots,
    squarefree_decomposition,
    to_rational,
    verify_sign,
)
from tavoid.exactnum import _simplest_between

rationals = st.fractions(min_value=-1, max_value=1, max_denominator=60)
small_polys = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=9), min_size=1, max_size=7).map(Poly)

CERT = [(F(-3, 5), 2), (F(-1, 3), 1), (F(-1, 15), 1), (F(1, 5), 2), (F(7, 15), 1)]


def test_from_factors_examples():
    assert poly_from_factors([(F(-1, 2), 1)]).coeffs == (F(1, 2), 1)
    roots = [(0, 1), (-1, 1), (F(-1, 2), 1), (F(-1, 4), 1), (F(1, 4), 1), (F(1, 2), 1)]
    p = poly_from_factors(roots)
    assert p.degree == 6
    assert p(1) == F(45, 32)
    c = F(2, 7)
    assert poly_from_factors([(c, 2)]).coeffs == (c * c, -2 * c, 1)


def test_eval_examples():
    assert poly_eval(poly_from_factors(CERT), 1) == F(524288, 421875)
    assert poly_eval(Poly.const(1), F(3, 7)) == 1
    p = poly_from_factors([(-1, 1), (F(-4, 11), 1), (F(-1, 44), 1), (F(7, 22), 1)])
    assert p(1) == F(10125, 5324)


def test_count_roots():
    assert count_roots(Poly([F(-1, 4), 0, 1]), (-1, 1)) == 2
    assert count_roots(Poly([1, 0, 1]), (-1, 1)) == 0
    # five distinct roots, two of them double
    assert count_roots(poly_from_factors(CERT), (-1, 1)) == 5
    assert count_roots(Poly([F(-1, 4), 0, 1]), (F(-1, 2), F(1, 2)), lo_open=True, hi_open=True) == 0
    assert count_roots(Poly([F(-1, 4), 0, 1]), (F(-1, 2), F(1, 2)), lo_open=True) == 1


def test_verify_sign_examples():
    region = IntervalSet.open_union([(F(-1, 3), F(-1, 15))]).complement_in(-1, F(7, 15))
    assert len(region) == 2
    assert verify_sign(poly_from_factors(CERT), region, "nonpositive").ok
    v = verify_sign(Poly([F(-1, 2), 1]), IntervalSet.closed(-1, 1), "nonpositive")
    assert not v.ok and v.witness > F(1, 2)
    nodes = [(F(-3, 5), 1), (F(-1, 3), 1), (F(-1, 15), 2), (F(1, 5), 2), (F(7, 15), 2)]
    region = IntervalSet.open_union([(F(-3, 5), F(-1, 3))]).complement_in(-1, 1)
    assert verify_sign(poly_from_factors(nodes), region, "nonnegative").ok


def test_degenerate_region_points():
    T = IntervalSet.open_union([(F(-1, 2), 0), (0, F(1, 2))])
    region = T.complement_in(-1, 1)
    assert [(iv.lo, iv.hi) for iv in region] == [(-1, F(-1, 2)), (0, 0), (F(1, 2), 1)]
    # t^2 - 1/4 is nonpositive at the isolated point 0 but positive near the ends
    assert not verify_sign(Poly([F(-1, 4), 0, 1]), region, "nonpositive").ok


def test_open_union_rejects_overlap_and_escape():
    with pytest.raises(ValueError):
        IntervalSet.open_union([(0, F(1, 2)), (F(1, 4), F(3, 4))])
    with pytest.raises(ValueError):
        IntervalSet.open_union([(F(-3, 2), 0)])


def test_rational_roots_exact():
    exact, loose = rational_roots(poly_from_factors(CERT), -1, 1)
    assert exact == [F(-3, 5), F(-1, 3), F(-1, 15), F(1, 5), F(7, 15)]
    assert loose == []
    exact, loose = rational_roots(Poly([-2, 0, 1]), 0, 2)
    assert exact == [] and len(loose) == 1
    lo, hi = loose[0]
    assert lo * lo < 2 < hi * hi


def test_format_round_trip():
    assert format_rational(F(3)) == "3/1" or format_rational(F(3)) == "3"
    assert to_rational(format_rational(F(-7, 12))) == F(-7, 12)


@given(rationals, rationals)
def test_rational_string_round_trip(a, b):
    for x in (a, b, a * b, a - b):
        assert to_rational(format_rational(x)) == x


@given(st.lists(rationals, min_size=1, max_size=6, unique=True), st.lists(st.integers(1, 3), min_size=6, max_size=6))
@settings(max_examples=60, deadline=None)
def test_roots_of_factored_polys(roots, mults):
    p = poly_from_factors(list(zip(roots, mults)))
    assert all(p(r) == 0 for r in roots)
    assert count_roots(p, (-1, 1)) == len(roots)
    # isolation works on the open interval
    assert len(isolate_roots(p, -1, 1)) == len([r for r in roots if abs(r) != 1])
    assert rational_roots(p, -1, 1)[0] == sorted(roots)


@given(small_polys)
@settings(max_examples=60, deadline=None)
def test_squares_are_nonnegative(p):
    assert verify_sign(p * p, IntervalSet.closed(-1, 1), "nonnegative").ok


@given(small_polys, small_polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q):
    assert p * q == q * p
    assert (p + q) * q == p * q + q * q
    t = F(3, 7)
    assert (p * q)(t) == p(t) * q(t)


@given(small_polys)
@settings(max_examples=40, deadline=None)
def test_squarefree_decomposition_reassembles(p):
    if p.is_zero() or p.degree == 0:
        return
    q = p * p * Poly([1, 1])
    prod = Poly.const(1)
    for factor, mult in squarefree_decomposition(q):
        prod = prod * factor**mult
    assert prod.monic() == q.monic()


@given(rationals, rationals)
def test_simplest_between(a, b):
    if a == b:
        return
    a, b = min(a, b), max(a, b)
    x = _simplest_between(a, b)
    assert a < x < b
    for d in range(1, x.denominator):
        # no fraction with a smaller denominator fits strictly inside
        k = (a * d).__floor__() + 1
        assert not (a < F(k, d) < b)
