"""The ten acceptance criteria, one test each.

A summary line per criterion (PASS/FAIL) is printed at the end of the
pytest run by the hook in ``conftest.py``.  Every attaining code is
enumerated in full here, including the 93150-point code (about 1.5 min).
"""

from __future__ import annotations

import random
import time
from fractions import Fraction as F

from tavoid.atlas import barnes_wall, catalog, leech
from tavoid.atlas.binary import dual_golay23
from tavoid.atlas.catalog import construct
from tavoid.atlas.leech import golay_octads, leech_shape_counts
from tavoid.atlas.srg import builtin_graph, embedding_pq, params_from_adjacency
from tavoid.certify import dgs_three_distance_bound
from tavoid.designs import Potential, design_strength, energy, moments, profile_from_distribution, solve_distribution
from tavoid.exactnum import Poly
from tavoid.gegenbauer import expand
from tavoid.interpolate import build_energy_certificate, build_multiset, srg_quadratic, three_distance_certificate
from tavoid.polyexpr import parse_poly
from tavoid.registry import ENTRIES, PRINTED_DISTRIBUTIONS, get_entry, main_identity, reproduce

STRENGTHS = {
    "c4600": 7, "c47104": 7, "c93150": 7, "c552": 5, "c11178": 5, "c48600": 5,
    "c2816": 5, "c2025": 4, "bw16": 7, "dual-golay": 3,
}
DISTRIBUTIONS = {
    "c4600": ([-1, F(-1, 3), 0, F(1, 3)], [1, 891, 2816, 891]),
    "c552": ([-1, F(-1, 5), F(1, 5)], [1, 275, 275]),
    **{k: (v[1], v[2]) for k, v in PRINTED_DISTRIBUTIONS.items()},
}


def _entries(*kinds):
    return [e for e in ENTRIES if e.kind in kinds]


def test_criterion_01_gegenbauer_reproduction():
    start = time.perf_counter()
    mismatched = {}
    for e in _entries("max", "expansion"):
        if e.coeffs is None:
            continue
        got = expand(parse_poly(e.poly).to_poly(), e.n).as_strings()
        want = [str(F(c)) if F(c).denominator != 1 else str(F(c).numerator) for c in e.coeffs]
        bad = [i for i, (g, w) in enumerate(zip(got, want)) if g != w]
        if bad or len(got) != len(want):
            mismatched[e.id] = bad
    for e in _entries("design"):
        f = parse_poly(e.poly).to_poly()
        assert (f(1), expand(f, e.n)[0]) == (F(e.f1), F(e.f0)), e.id
    elapsed = time.perf_counter() - start
    # only pre-flagged misprints disagree, and each produces a discrepancy row
    assert mismatched == {"thm5.7": [2], "thm7.2/case1/P7": [4], "thm7.2/case2/P7": [5]}
    for i in mismatched:
        row = reproduce(i)
        assert row["status"] == "erratum" and row["errata"]
    assert reproduce("thm5.7")["errata"][0]["computed"] == "255/11264"
    assert elapsed < 1.0, elapsed


def test_criterion_02_bound_reproduction():
    start = time.perf_counter()
    for e in _entries("max", "design"):
        f = parse_poly(e.poly).to_poly()
        assert f(1) / expand(f, e.n)[0] == e.bound, e.id
    assert dgs_three_distance_bound(23, F(-9, 23), F(-1, 23), F(7, 23)).bound == 2048
    assert time.perf_counter() - start < 1.0
    bounds = {e.id.split("/")[0]: e.bound for e in _entries("max", "design")}
    assert set(bounds.values()) == {47104, 93150, 11178, 48600, 2816, 2025, 4320}


def test_criterion_03_construction_counts():
    for fn in (catalog.construct, leech.leech_minimal, catalog.leech_base_point, barnes_wall.bw16_minimal):
        fn.cache_clear()
    start = time.perf_counter()
    assert leech.leech_minimal().size == 196560
    assert leech_shape_counts() == (1104, 97152, 98304)
    sizes = {c: construct(c).size for c in ("c4600", "c47104", "c93150", "c552", "c11178", "c48600", "bw16", "dual-golay")}
    assert sizes == {
        "c4600": 4600, "c47104": 47104, "c93150": 93150, "c552": 552,
        "c11178": 11178, "c48600": 48600, "bw16": 4320, "dual-golay": 2048,
    }
    assert len(dual_golay23().codewords()) == 2048
    assert len(golay_octads()) == 759
    assert time.perf_counter() - start < 30.0


def test_criterion_04_profiles(profiles):
    for code_id in ("c47104", "c93150", "c11178", "c48600", "c2816", "c2025", "bw16", "dual-golay"):
        I, F_ = DISTRIBUTIONS[code_id]
        p = profiles(code_id)
        assert p.mode == "full"
        assert list(p.inner_products) == list(I), code_id
        assert list(p.distribution) == list(F_), code_id


def test_criterion_05_design_strengths(profiles):
    for code_id, tau in STRENGTHS.items():
        p = profiles(code_id)
        ms = moments(p, 12)
        assert design_strength(p, 12) == tau, code_id
        assert all(m >= 0 for m in ms), code_id
    assert moments(profiles("c4600"), 9)[8] == 0
    assert moments(profiles("c47104"), 9)[8] == 0
    assert moments(profiles("c48600"), 7)[6] == 0


def test_criterion_06_quadrature_solver(profiles):
    for code_id, tau in STRENGTHS.items():
        p = profiles(code_id)
        sol = solve_distribution(p.inner_products, p.N, p.n, tau)
        assert not sol.issues and sol.as_ints() == p.distribution, code_id


def _energy_certificate(entry, h):
    n, I, _ = PRINTED_DISTRIBUTIONS[entry.code]
    which = entry.extra.get("three_distance")
    if which:
        return three_distance_certificate(h, *I, which, n, entry.bound)
    return build_energy_certificate(h, I, entry.avoid, n, entry.bound)


ENERGY = [e for e in _entries("energy") if not e.extra.get("as_printed")]


def test_criterion_07_energy_attainment(profiles):
    families = {e.id.split("/")[0] for e in ENERGY}
    assert families == {"thm7.1", "thm7.2", "thm7.3", "thm7.4", "thm7.7", "thm7.8", "thm7.9", "thm7.10"}
    for e in ENERGY:
        p = profiles(e.code)
        for k in (1, 2):
            h = Potential.riesz(k)
            cert = _energy_certificate(e, h)
            assert cert.valid, (e.id, k, cert.failures)
            assert all(c["ok"] for c in cert.positivity), e.id
            assert cert.node_sign["ok"], e.id
            assert cert.bound == energy(p, h), (e.id, k)
    adj = builtin_graph("petersen")
    params = params_from_adjacency(adj)
    dim, pp, qq = embedding_pq(params, "second")
    petersen = profiles("srg:petersen:second")
    for k in (1, 2):
        h = Potential.riesz(k)
        bound = srg_quadratic(h, pp, qq, dim).bound(params.v)
        formula = params.v * params.k * h(pp) + params.v * (params.v - params.k - 1) * h(qq)
        assert bound == formula == energy(petersen, h)


def test_criterion_08_bridge_identity(profiles):
    rng = random.Random(8)
    codes = [c for c, s in STRENGTHS.items() if construct(c).size <= 11178] + ["srg:petersen:second"]
    for code_id in codes:
        p = profiles(code_id)
        tau = design_strength(p, 12)
        for _ in range(50):
            h = Poly([F(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(rng.randint(1, tau + 1))])
            assert energy(p, Potential.polynomial(h)) == p.N**2 * expand(h, p.n)[0] - p.N * h(1), code_id


def test_criterion_09_main_identity(profiles):
    checked = 0
    for e in _entries("max", "design"):
        lhs, rhs = main_identity(parse_poly(e.poly).to_poly(), profiles(e.code))
        assert lhs == rhs, e.id
        checked += 1
    for e in ENERGY:
        cert = _energy_certificate(e, Potential.riesz(1))
        lhs, rhs = main_identity(cert.interpolant, profiles(e.code))
        assert lhs == rhs, e.id
        checked += 1
    assert checked == len(_entries("max", "design")) + len(ENERGY)


def test_criterion_10_48_dimensional_data():
    e = get_entry("data48")
    nodes, freqs = e.extra["nodes"], e.extra["freqs"]
    assert sum(freqs) == 52416000 - 1
    h = Potential.riesz(1)
    rhs = 36848 * (h(F(-1, 2)) + h(F(1, 2))) + 1678887 * (h(F(-1, 3)) + h(F(1, 3)))
    rhs += 12608784 * (h(F(-1, 6)) + h(F(1, 6))) + 23766960 * h(0) + h(-1)
    assert energy(profile_from_distribution(48, nodes, freqs), h) == 52416000 * rhs
    assert reproduce("data48")["status"] == "pass"
