import random
from fractions import Fraction as F

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tavoid.atlas.catalog import construct
from tavoid.atlas.codes import PointCode
from tavoid.certify import avoid_set
from tavoid.designs import (
    CodeProfile,
    Potential,
    design_strength,
    energy,
    interval_precision,
    is_t_avoiding,
    moments,
    profile,
    profile_from_distribution,
    solve_distribution,
    verify_quadrature,
)
from tavoid.exactnum import IntervalSet, Poly
from tavoid.gegenbauer import expand
from tavoid.polyexpr import parse_poly

SIMPLEX = PointCode(3, 3, np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]))
PAIR = PointCode(2, 1, np.array([[1, 0], [-1, 0]]))
I_1_4 = [F(-3, 5), F(-1, 3), F(-1, 15), F(1, 5), F(7, 15)]
F_1_4 = [275, 7128, 22275, 15400, 2025]

# codes small enough for repeated property checks, with their design strengths
SMALL = {"c552": 5, "c2025": 4, "c2816": 5, "dual-golay": 3, "bw16": 7, "c4600": 7, "c11178": 5}


def test_small_profiles(profiles):
    p = profiles("c2816")
    assert p.inner_products == (-1, F(-1, 3), 0, F(1, 3))
    assert p.distribution == (1, 567, 1680, 567)
    assert p.distance_invariant and p.antipodal
    assert profile(PAIR).distribution == (1,)
    assert profiles("dual-golay").antipodal is False


def test_moments(profiles):
    ms = moments(profiles("c2816"), 12)
    assert ms[:5] == [0] * 5
    assert all(ms[i] == 0 for i in range(0, 12, 2))  # odd indices, antipodal
    single = CodeProfile(5, 1, {})
    assert moments(single, 4) == [1, 1, 1, 1]
    with pytest.raises(ValueError, match="full pair counts"):
        moments(CodeProfile(5, 3, None, mode="sampled"), 2)


def test_design_strengths(profiles):
    assert design_strength(profiles("bw16"), 12) == 7
    assert design_strength(profiles("dual-golay"), 12) == 3
    assert design_strength(profile(SIMPLEX), 6) == 2


def test_avoidance():
    p = profile_from_distribution(23, I_1_4, F_1_4)
    assert is_t_avoiding(p, avoid_set([(F(-1, 3), F(-1, 15))])).ok
    v = is_t_avoiding(p, avoid_set([(F(-2, 5), 0)]))
    assert not v.ok and v.offenders == (F(-1, 3), F(-1, 15))
    assert is_t_avoiding(p, IntervalSet()).ok


def test_energy_examples(profiles):
    p = profiles("c2816")
    assert energy(p, Potential.polynomial(Poly([1, 1]))) == 2816 * 2814
    assert energy(profile(PAIR), Potential.riesz(1)) == F(1, 2)


def test_energy_48_dimensional_data():
    nodes = [F(-1), F(-1, 2), F(-1, 3), F(-1, 6), F(0), F(1, 6), F(1, 3), F(1, 2)]
    freqs = [1, 36848, 1678887, 12608784, 23766960, 12608784, 1678887, 36848]
    p = profile_from_distribution(48, nodes, freqs)
    expected = 36848 * (F(1, 3) + 1) + 1678887 * (F(3, 8) + F(3, 4)) + 12608784 * (F(3, 7) + F(3, 5)) + F(23766960, 2) + F(1, 4)
    assert energy(p, Potential.riesz(1)) == p.N * expected


def test_exponential_energy_is_an_enclosure(profiles):
    p = profiles("c2816")
    e = energy(p, Potential.exponential(1))
    with mpmath.workprec(400):
        direct = sum(c * mpmath.exp(mpmath.mpf(t.numerator) / t.denominator) for t, c in p.pair_counts.items())
        assert e.a <= direct <= e.b
    assert float(e.delta) < 1e-20


def test_potential_behaviour():
    h = Potential.riesz(2)
    assert h(F(1, 2)) == 1
    assert h.derivative(0, 1) == F(1, 2)
    with pytest.raises(ValueError, match="singular"):
        h(1)
    assert Potential.exponential(2).absolutely_monotone
    with interval_precision(200):
        assert mpmath.iv.prec == 200
    assert mpmath.iv.prec != 200 or mpmath.iv.prec == 53


def test_solve_distribution_examples():
    assert solve_distribution([-1, F(-1, 3), 0, F(1, 3)], 2816, 22, 5).as_ints() == (1, 567, 1680, 567)
    sol = solve_distribution([F(-1, 2), F(-1, 5), F(1, 10), F(2, 5)], 11178, 23, 5)
    assert sol.as_ints() == (352, 4125, 5600, 1100)
    assert solve_distribution([-1], 2, 7, 1).as_ints() == (1,)
    with pytest.raises(ValueError):
        solve_distribution([0, F(1, 2), F(1, 3)], 10, 5, 1)


def test_solve_distribution_reports_bad_data():
    sol = solve_distribution([F(-1, 2), F(1, 3)], 7, 5, 2)
    assert sol.issues


def test_verify_quadrature(profiles):
    p = profiles("c2816")
    assert verify_quadrature(p, Poly([0, 0, 0, 0, 1]), 5)
    rng = np.random.default_rng(3)
    pts = construct("leech-min").points[rng.choice(196560, 5, replace=False)]
    five = PointCode(24, 32, pts)
    assert not verify_quadrature(profile(five), Poly([0, 1]), 1)


def test_sampled_profiles():
    code = construct("c48600")
    p = profile(code, mode="sampled", k=8, tau=5)
    assert p.distribution == (506, 8855, 23046, 14421, 1771)
    # without a vouched strength the sample proves nothing about other points
    q = profile(code, mode="sampled", k=8)
    assert q.pair_counts is None and not q.distance_invariant
    assert profile(code, mode="sampled", k=8, seed=1, tau=5).distribution == p.distribution


def test_profile_json_round_trip(profiles):
    p = profiles("c2025")
    assert CodeProfile.from_json(p.to_json()).pair_counts == p.pair_counts


def test_jobs_agree():
    code = construct("c552")
    assert profile(code, jobs=3).pair_counts == profile(code).pair_counts


def test_moments_nonnegative(profiles):
    for code_id in SMALL:
        assert all(m >= 0 for m in moments(profiles(code_id), 12))


poly_coeffs = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=10), min_size=1, max_size=8)


@given(st.sampled_from(sorted(SMALL)), poly_coeffs)
@settings(max_examples=60, deadline=None)
def test_bridge_identity(profiles, code_id, coeffs):
    tau = SMALL[code_id]
    h = Poly(coeffs[: tau + 1])
    p = profiles(code_id)
    assert energy(p, Potential.polynomial(h)) == p.N**2 * expand(h, p.n)[0] - p.N * h(1)


def test_certificate_polynomials_satisfy_quadrature(profiles):
    p = profiles("c11178")
    for text in ("(t+1/2)*(t+1/5)*(t-1/10)*(t-2/5)", "(t+1/2)^2*(t+1/5)*(t-1/10)"):
        assert verify_quadrature(p, parse_poly(text).to_poly(), 5)
