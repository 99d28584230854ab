from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tavoid.certify import avoid_set
from tavoid.designs import Potential, energy, profile_from_distribution
from tavoid.exactnum import IntervalSet, Poly, verify_sign
from tavoid.gegenbauer import expand
from tavoid.interpolate import (
    NodeMultiset,
    build_energy_certificate,
    build_multiset,
    check_cond_b,
    divided_difference,
    hermite_interpolant,
    newton_coefficients,
    node_product,
    partial_products,
    srg_quadratic,
    three_distance_certificate,
)
from tavoid.polyexpr import parse_poly
from tavoid.registry import ENTRIES, PRINTED_DISTRIBUTIONS

T2 = Potential.polynomial(Poly([0, 0, 1]))
R1 = Potential.riesz(1)
I_1_4 = PRINTED_DISTRIBUTIONS["c47104"][1]
I_0 = PRINTED_DISTRIBUTIONS["c93150"][1]


def test_divided_differences():
    assert divided_difference(T2, [0, 1]) == 1
    a = F(2, 9)
    assert divided_difference(T2, [a, a]) == 2 * a
    assert divided_difference(R1, [F(-3, 5), F(-1, 3)]) == F(15, 64)


def test_hermite_conditions():
    m = NodeMultiset((F(-1), F(-1), F(-1, 2), F(-1, 4), F(0), F(1, 4), F(1, 2), F(1, 2)))
    H = hermite_interpolant(R1, m)
    assert H.degree == 7
    for t in set(m.nodes):
        assert H(t) == R1(t)
    dH = H.derivative()
    for t in (F(-1), F(1, 2)):
        assert dH(t) == R1.derivative(t, 1)
    c = F(1, 3)
    assert hermite_interpolant(R1, NodeMultiset((c,))) == Poly.const(R1(c))


poly_coeffs = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=8), min_size=1, max_size=7)
node_lists = st.lists(st.fractions(min_value=-1, max_value=F(9, 10), max_denominator=12), min_size=7, max_size=9)


@given(poly_coeffs, node_lists)
@settings(max_examples=60, deadline=None)
def test_interpolation_reproduces_polynomials(coeffs, nodes):
    p = Poly(coeffs)
    m = NodeMultiset(tuple(sorted(nodes)))
    assert hermite_interpolant(Potential.polynomial(p), m) == p


def test_partial_products():
    m = build_multiset(I_1_4, avoid_set([(F(-3, 5), F(-1, 3))]), 7)
    P = partial_products(m)
    assert expand(P[4], 23).as_strings() == ["1096/388125", "104/3375", "11704/77625", "66088/163125", "2288/3375", "176/261"]
    assert P[6] == parse_poly("(t+3/5)*(t+1/3)*(t+1/15)^2*(t-1/5)^2*(t-7/15)").to_poly()
    assert partial_products(NodeMultiset((F(0), F(0)))) == [Poly.identity()]


def test_build_multiset_examples():
    m = build_multiset(I_1_4, avoid_set([(F(-3, 5), F(-1, 3))]), 7)
    assert m.multiplicities() == [(F(-3, 5), 1), (F(-1, 3), 1), (F(-1, 15), 2), (F(1, 5), 2), (F(7, 15), 2)]
    m = build_multiset(I_0, avoid_set([(F(-1, 2), F(-1, 4)), (0, F(1, 4))]), 7)
    assert m.multiplicities() == [(F(-1), 2), (F(-1, 2), 1), (F(-1, 4), 1), (F(0), 1), (F(1, 4), 1), (F(1, 2), 2)]
    a, b, g = F(-9, 23), F(-1, 23), F(7, 23)
    assert build_multiset([a, b, g], avoid_set([(a, b)]), 3).nodes == (a, b, g, g)


def test_build_multiset_errors():
    with pytest.raises(ValueError, match="outside the inner products"):
        build_multiset(I_1_4, avoid_set([(F(-1, 2), F(-1, 3))]), 7)
    with pytest.raises(ValueError):
        build_multiset(I_1_4, avoid_set([(F(-3, 5), F(-1, 3))]), 5)


def test_energy_certificate_matches_distribution():
    T = avoid_set([(F(-3, 5), F(-1, 3))])
    _, I, freqs = PRINTED_DISTRIBUTIONS["c47104"]
    for k in (1, 2):
        h = Potential.riesz(k)
        cert = build_energy_certificate(h, I, T, 23, 47104)
        assert cert.valid
        assert cert.bound == 47104 * sum(a * h(t) for t, a in zip(I, freqs))


def test_polynomial_potential_on_a_design():
    n, I, freqs = PRINTED_DISTRIBUTIONS["c47104"]
    p = profile_from_distribution(n, I, freqs)
    h = Potential.polynomial(parse_poly("(t+1)^3*(t+1/2)^2").to_poly())
    cert = build_energy_certificate(h, I, avoid_set([(F(-3, 5), F(-1, 3))]), n, p.N)
    assert cert.interpolant == h.param
    assert cert.bound == energy(p, h)


def test_exponential_certificate_encloses_energy():
    n, I, freqs = PRINTED_DISTRIBUTIONS["c11178"]
    h = Potential.exponential(1)
    cert = build_energy_certificate(h, I, avoid_set([(F(-1, 2), F(-1, 5))]), n, 11178)
    assert cert.valid
    e = energy(profile_from_distribution(n, I, freqs), h)
    assert cert.bound.a <= e.b and e.a <= cert.bound.b
    assert float(cert.bound.delta) < 1e-15 * float(cert.bound.a)


def test_newton_coefficients_nonnegative_on_registry_cases():
    for entry in ENTRIES:
        if entry.kind != "energy" or "as_printed" in entry.extra or "three_distance" in entry.extra:
            continue
        n, I, _ = PRINTED_DISTRIBUTIONS[entry.code]
        degree = 2 * len(I) - len({x for iv in entry.avoid for x in (iv.lo, iv.hi)} & set(I)) - 1
        m = build_multiset(I, entry.avoid, degree)
        for k in (1, 2):
            assert all(c >= 0 for c in newton_coefficients(Potential.riesz(k), m))
        assert verify_sign(node_product(m), entry.avoid.complement_in(-1, 1), "nonnegative").ok


def test_srg_quadratic_petersen():
    p, q = F(-2, 3), F(1, 6)
    for k in (1, 2):
        h = Potential.riesz(k)
        quad = srg_quadratic(h, p, q, 4)
        g = quad.g
        assert g(p) == h(p) and g(q) == h(q) and g.derivative()(q) == h.derivative(q, 1)
        assert quad.a >= 0 and quad.b >= 0
        v, deg = 10, 3
        assert v * v * quad.gegenbauer[0] - v * g(1) == v * deg * h(p) + v * (v - deg - 1) * h(q)
        assert quad.bound(v) == v * deg * h(p) + v * (v - deg - 1) * h(q)


def test_three_distance_certificates():
    for code_id in ("dual-golay", "c2025"):
        n, (a, b, g), freqs = PRINTED_DISTRIBUTIONS[code_id]
        N = sum(freqs) + 1
        assert check_cond_b(n, a, b, g) == []
        for which in ("avoid-(alpha,beta)", "avoid-(beta,gamma)"):
            cert = three_distance_certificate(R1, a, b, g, which, n, N)
            assert cert.valid
            assert cert.bound == N * sum(x * R1(t) for t, x in zip((a, b, g), freqs))


def test_three_distance_guard():
    x = F(-1, 3)
    with pytest.raises(ValueError, match="three distinct"):
        three_distance_certificate(R1, x, x, x, "avoid-(alpha,beta)", 23, 10)
    assert check_cond_b(23, F(-1, 2), F(-1, 4), F(1, 2))
