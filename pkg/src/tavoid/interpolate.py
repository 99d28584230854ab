"""Hermite interpolation in Newton form and interpolation-based energy certificates.

The energy bound of an interpolant ``H = sum_i d_i P_i`` (``d_i`` divided
differences, ``P_i`` partial products, ``P_0 = 1``) is linear in the
``d_i``::

    N^2 H_0 - N H(1) = sum_i d_i (N^2 (P_i)_0 - N P_i(1))

so the bound is formed from exact rational weights even when the ``d_i``
are intervals (exponential potentials).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .designs import Potential, interval_precision, to_interval
from .exactnum import IntervalSet, Poly, format_rational, to_rational, verify_sign
from .gegenbauer import GegenbauerExpansion, expand, is_positive_definite

__all__ = [
    "NodeMultiset",
    "EnergyCertificate",
    "SRGQuadratic",
    "divided_difference",
    "newton_coefficients",
    "hermite_interpolant",
    "partial_products",
    "node_product",
    "build_multiset",
    "build_energy_certificate",
    "srg_quadratic",
    "three_distance_certificate",
    "check_cond_b",
]


@dataclass(frozen=True)
class NodeMultiset:
    nodes: tuple[Fraction, ...]

    def __post_init__(self):
        nodes = tuple(to_rational(t) for t in self.nodes)
        if list(nodes) != sorted(nodes):
            raise ValueError("nodes must be nondecreasing")
        object.__setattr__(self, "nodes", nodes)

    @classmethod
    def from_multiplicities(cls, pairs: Iterable[tuple]) -> "NodeMultiset":
        out = []
        for t, m in sorted((to_rational(t), int(m)) for t, m in pairs):
            if m < 1:
                raise ValueError("multiplicities must be at least 1")
            out.extend([t] * m)
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    @property
    def degree(self) -> int:
        return len(self.nodes) - 1

    def multiplicities(self) -> list[tuple[Fraction, int]]:
        out: list[tuple[Fraction, int]] = []
        for t in self.nodes:
            if out and out[-1][0] == t:
                out[-1] = (t, out[-1][1] + 1)
            else:
                out.append((t, 1))
        return out

    def __str__(self) -> str:
        return "{" + ", ".join(format_rational(t) for t in self.nodes) + "}"


def _as_multiset(m) -> NodeMultiset:
    return m if isinstance(m, NodeMultiset) else NodeMultiset(tuple(sorted(to_rational(t) for t in m)))


def _newton_table(h: Potential, nodes: Sequence[Fraction]) -> list:
    """Top row of the divided-difference table: ``[h[t_1], h[t_1,t_2], ...]``."""
    z = list(nodes)
    m = len(z)
    exact = h.is_rational

    def lift(x):
        return x if exact else to_interval(x)

    col = [h.derivative(t, 0) for t in z]
    top = [col[0]]
    for j in range(1, m):
        nxt = []
        for i in range(m - j):
            if z[i + j] == z[i]:
                nxt.append(h.derivative(z[i], j) / math.factorial(j))
            else:
                nxt.append((col[i + 1] - col[i]) / lift(z[i + j] - z[i]))
        col = nxt
        top.append(col[0])
    return top


def newton_coefficients(h: Potential, m) -> list:
    """Divided differences ``h[t_1..t_{i+1}]`` for ``i = 0..|m|-1``."""
    m = _as_multiset(m)
    if not len(m):
        raise ValueError("empty node multiset")
    if h.is_rational:
        return _newton_table(h, m.nodes)
    with interval_precision(h.prec):
        return _newton_table(h, m.nodes)


def divided_difference(h: Potential, nodes) -> object:
    """``h[t_1, ..., t_k]``; repeated nodes use ``h^{(j)}(t)/j!``."""
    nodes = sorted(to_rational(t) for t in nodes)
    return newton_coefficients(h, NodeMultiset(tuple(nodes)))[-1]


def partial_products(m) -> list[Poly]:
    """``[P_1, ..., P_{|m|-1}]`` with ``P_i = (t - t_1)...(t - t_i)``."""
    m = _as_multiset(m)
    out, cur = [], Poly.const(1)
    for t in m.nodes[:-1]:
        cur = cur * Poly.linear(t)
        out.append(cur)
    return out


def node_product(m) -> Poly:
    m = _as_multiset(m)
    cur = Poly.const(1)
    for t in m.nodes:
        cur = cur * Poly.linear(t)
    return cur


def hermite_interpolant(h: Potential, m) -> Poly:
    """Exact Newton-form interpolant; rational potential families only."""
    if not h.is_rational:
        raise TypeError("exact interpolant needs a rational potential; use newton_coefficients for intervals")
    m = _as_multiset(m)
    coefs = newton_coefficients(h, m)
    out = Poly.const(coefs[0])
    for d, P in zip(coefs[1:], partial_products(m)):
        out = out + P.scale(d)
    return out


def build_multiset(I: Iterable, T: IntervalSet, target_degree: int) -> NodeMultiset:
    """Simple nodes at the endpoints of ``T`` that lie in ``I``, double nodes elsewhere in ``I``."""
    nodes = sorted({to_rational(t) for t in I})
    node_set = set(nodes)
    endpoints = {e for iv in T for e in (iv.lo, iv.hi)}
    stray = sorted(e for e in endpoints if e not in node_set and e != -1)
    if stray:
        raise ValueError(
            "endpoints of T outside the inner products: " + ", ".join(format_rational(e) for e in stray)
        )
    m = NodeMultiset.from_multiplicities((t, 1 if t in endpoints else 2) for t in nodes)
    if m.degree != target_degree:
        raise ValueError(f"multiset {m} has {len(m)} nodes, expected {target_degree + 1}")
    return m


def _bound_weights(m: NodeMultiset, n: int, N: int) -> list[Fraction]:
    weights = [Fraction(N * N - N)]
    for P in partial_products(m):
        weights.append(N * N * expand(P, n)[0] - N * P(1))
    return weights


def _nonnegative(x) -> bool | None:
    """``True``/``False`` when decided, ``None`` when an interval straddles 0."""
    if isinstance(x, Fraction):
        return x >= 0
    if x.a >= 0:
        return True
    if x.b < 0:
        return False
    return None


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return format_rational(x)
    return mpmath.nstr(x, 20)


@dataclass
class EnergyCertificate:
    h: Potential
    n: int
    N: int
    T: IntervalSet
    multiset: NodeMultiset
    newton: list
    interpolant: Poly | None
    partial_products: list[Poly]
    positivity: list[dict]
    node_sign: dict
    bound: object
    failures: list[str] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.failures

    @property
    def interpolant_expansion(self) -> GegenbauerExpansion | None:
        return None if self.interpolant is None else expand(self.interpolant, self.n)

    def to_json(self) -> dict:
        return {
            "kind": "energy",
            "potential": self.h.describe(),
            "n": self.n,
            "N": self.N,
            "T": str(self.T),
            "multiset": [format_rational(t) for t in self.multiset],
            "newton": [_fmt(d) for d in self.newton],
            "interpolant": None if self.interpolant is None else [format_rational(c) for c in self.interpolant.coeffs],
            "partial_products": [
                {
                    "index": i + 1,
                    "factors": [format_rational(t) for t in self.multiset.nodes[: i + 1]],
                    "gegenbauer": expand(P, self.n).as_strings(),
                    **self.positivity[i],
                }
                for i, P in enumerate(self.partial_products)
            ],
            "node_product": self.node_sign,
            "bound": _fmt(self.bound),
            "valid": self.valid,
            "failures": self.failures,
            **({"metadata": self.metadata} if self.metadata else {}),
        }


def _needs_check(m: NodeMultiset, i: int) -> bool:
    """Whether ``P_i`` has a factor ``t - c`` with ``c > 0``."""
    return any(t > 0 for t in m.nodes[:i])


def _assemble(
    h: Potential,
    m: NodeMultiset,
    T: IntervalSet,
    n: int,
    N: int,
    strict: bool,
    check_node_product: bool = True,
) -> EnergyCertificate:
    failures = []
    newton = newton_coefficients(h, m)
    for i, d in enumerate(newton):
        ok = _nonnegative(d)
        if ok is None:
            failures.append(f"divided difference {i} undecided at working precision")
        elif not ok:
            failures.append(f"divided difference {i} is negative ({_fmt(d)})")
    products = partial_products(m)
    positivity = []
    for i, P in enumerate(products, start=1):
        if strict or _needs_check(m, i):
            verdict = is_positive_definite(expand(P, n), from_index=1)
            positivity.append({"checked": True, "ok": verdict.ok, "offending": list(verdict.offending)})
            if not verdict.ok:
                failures.append(f"partial product P_{i} has negative Gegenbauer coefficients at {list(verdict.offending)}")
        else:
            positivity.append({"checked": False, "ok": True, "reason": "product of factors t + c with c >= 0"})
    node_sign: dict = {"checked": False}
    if check_node_product:
        region = T.complement_in(-1, 1)
        v = verify_sign(node_product(m), region, "nonnegative")
        node_sign = {"checked": True, "ok": v.ok, "region": str(region)}
        if not v.ok:
            node_sign["witness"] = format_rational(v.witness)
            failures.append(f"node product negative at {format_rational(v.witness)} outside T")
    weights = _bound_weights(m, n, N)
    if h.is_rational:
        bound = sum(d * w for d, w in zip(newton, weights))
        interp = hermite_interpolant(h, m)
    else:
        with interval_precision(h.prec):
            bound = mpmath.iv.mpf(0)
            for d, w in zip(newton, weights):
                bound += d * to_interval(w)
        interp = None
    meta = {"derivative_sign": f"h^({len(m)}) > 0 on (-1, 1)"}
    return EnergyCertificate(h, n, N, T, m, newton, interp, products, positivity, node_sign, bound, failures, meta)


def build_energy_certificate(
    h: Potential, I: Iterable, T: IntervalSet, n: int, N: int, *, degree: int | None = None, strict: bool = False
) -> EnergyCertificate:
    """Interpolate ``h`` on the multiset from ``build_multiset`` and check the result.

    The interpolant must lie below ``h`` off ``T`` and be positive definite.

    ``degree`` defaults to ``2|I| - (number of endpoints of T in I) - 1``.
    """
    I = sorted({to_rational(t) for t in I})
    if degree is None:
        ends = {e for iv in T for e in (iv.lo, iv.hi)} & set(I)
        degree = 2 * len(I) - len(ends) - 1
    m = build_multiset(I, T, degree)
    return _assemble(h, m, T, n, N, strict)


@dataclass(frozen=True)
class SRGQuadratic:
    g: Poly
    a: Fraction
    b: Fraction
    c: Fraction
    gegenbauer: tuple[Fraction, Fraction, Fraction]

    def bound(self, v: int) -> Fraction:
        return v * v * self.gegenbauer[0] - v * self.g(1)


def srg_quadratic(h: Potential, p, q, n: int) -> SRGQuadratic:
    """Quadratic ``g`` touching ``h`` at ``p`` and tangent at ``q`` (``p < 0 < q``, ``p + q <= 0``)."""
    if not h.is_rational:
        raise TypeError("srg_quadratic needs a rational potential")
    p, q = to_rational(p), to_rational(q)
    if not p < 0 < q:
        raise ValueError("need p < 0 < q")
    if p + q > 0:
        raise ValueError("need p + q <= 0 (use the other embedding of the graph)")
    hp, hq, dq = h(p), h(q), h.derivative(q, 1)
    a = (hp - hq) / (q - p) ** 2 + dq / (q - p)
    b = 2 * q * (hq - hp) / (q - p) ** 2 - (q + p) * dq / (q - p)
    # expanding g = h(q) + h'(q)(t - q) + a (t - q)^2 at t = 0
    c = p * q * dq / (q - p) + (q * q * hp + p * (p - 2 * q) * hq) / (p - q) ** 2
    g = Poly([c, b, a])
    if g(p) != hp or g(q) != hq or g.derivative()(q) != dq:
        raise AssertionError("quadratic does not match the interpolation conditions")
    geg = (a / n + c, b, (n - 1) * a / n)
    if tuple(expand(g, n)[i] for i in range(3)) != geg:
        raise AssertionError("closed-form Gegenbauer coefficients disagree with the expansion")
    return SRGQuadratic(g, a, b, c, geg)


def check_cond_b(n: int, alpha, beta, gamma) -> list[str]:
    """Violated inequalities of the three-distance energy hypothesis (empty when all hold)."""
    a, b, g = (to_rational(x) for x in (alpha, beta, gamma))
    bad = []
    if not (-1 <= a < b < g < 1):
        bad.append("need -1 <= alpha < beta < gamma < 1 (three distinct inner products)")
        return bad
    if a * b + b * g + g * a < Fraction(-3, n + 2):
        bad.append("alpha*beta + beta*gamma + gamma*alpha >= -3/(n+2) fails")
    if a + b + g > 0:
        bad.append("alpha + beta + gamma <= 0 fails")
    return bad


def three_distance_certificate(h: Potential, alpha, beta, gamma, which: str, n: int, N: int) -> EnergyCertificate:
    """Energy certificate for ``(alpha, beta)``- or ``(beta, gamma)``-avoiding codes of size ``N``."""
    bad = check_cond_b(n, alpha, beta, gamma)
    if bad:
        raise ValueError("; ".join(bad))
    a, b, g = (to_rational(x) for x in (alpha, beta, gamma))
    if which == "avoid-(alpha,beta)":
        m, T = NodeMultiset((a, b, g, g)), IntervalSet.open_union([(a, b)])
    elif which == "avoid-(beta,gamma)":
        m, T = NodeMultiset((a, a, b, g)), IntervalSet.open_union([(b, g)])
    else:
        raise ValueError("which must be 'avoid-(alpha,beta)' or 'avoid-(beta,gamma)'")
    # every partial product is checked from index 1; f_0 plays no role
    cert = _assemble(h, m, T, n, N, strict=True)
    cert.metadata["three_distance"] = [format_rational(x) for x in (a, b, g)]
    return cert
