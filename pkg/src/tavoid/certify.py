"""Linear-programming certificates for T-avoiding codes, designs and energy.

* max-code: ``f <= 0`` on ``[-1, s]`` minus ``T`` and ``f`` positive definite
  give ``|C| <= f(1)/f_0``.
* design: ``f >= 0`` on ``[-1, 1]`` minus ``T`` and ``f_i <= 0`` above the
  strength give ``|C| >= f(1)/f_0``.
* energy: ``f <= h`` on ``[-1, 1)`` minus ``T`` and ``f_i >= 0`` (``i >= 1``)
  give ``E_h(C) >= N^2 (f_0 - f(1)/N)``.

Avoided sets are unions of open intervals, so each sign region is a finite
union of closed intervals and the sign checks are exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .designs import Potential, interval_precision, to_interval
from .exactnum import IntervalSet, Poly, format_rational, rational_roots, to_rational, verify_sign
from .gegenbauer import GegenbauerExpansion, expand, is_positive_definite
from .interpolate import EnergyCertificate, build_energy_certificate

__all__ = [
    "Certificate",
    "CannotCertify",
    "avoid_set",
    "certify_max",
    "certify_design",
    "certify_energy",
    "dgs_three_distance_bound",
    "ThreeDistanceBound",
]


class CannotCertify(RuntimeError):
    """The sign condition could not be decided (never reported as a pass)."""


def avoid_set(pairs: Sequence[tuple]) -> IntervalSet:
    return IntervalSet.open_union([(to_rational(a), to_rational(b)) for a, b in pairs])


@dataclass
class Certificate:
    kind: str
    n: int
    params: dict
    T: IntervalSet
    polynomial: Poly
    expansion: GegenbauerExpansion
    bound: object
    checks: dict
    factored: str = ""
    attainment: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(c["ok"] for c in self.checks.values())

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            **{k: (format_rational(v) if isinstance(v, Fraction) else v) for k, v in self.params.items()},
            "T": str(self.T),
            "polynomial": self.factored or str(self.polynomial),
            "expansion": self.expansion.as_strings(),
            "f(1)": format_rational(self.polynomial(1)),
            "bound": format_rational(self.bound) if isinstance(self.bound, Fraction) else mpmath.nstr(self.bound, 20),
            "checks": self.checks,
            "valid": self.valid,
            **({"attainment": self.attainment} if self.attainment else {}),
        }


def _sign_check(p: Poly, region: IntervalSet, sign: str) -> dict:
    v = verify_sign(p, region, sign)
    out = {"ok": v.ok, "region": str(region), "sign": sign}
    if not v.ok:
        out["witness"] = format_rational(v.witness)
        out["reason"] = v.reason
    return out


def _zeros_in(f: Poly, region: IntervalSet) -> list[str]:
    zs = []
    for iv in region:
        exact, loose = rational_roots(f, iv.lo, iv.hi)
        zs.extend(format_rational(x) for x in exact)
        zs.extend(f"({float(a):.12g}, {float(b):.12g})" for a, b in loose)
    return sorted(set(zs), key=lambda z: zs.index(z))


def _ratio(f: Poly, e: GegenbauerExpansion):
    return f(1) / e[0] if e[0] != 0 else None


def certify_max(f: Poly, n: int, s, T: IntervalSet, factored: str = "") -> Certificate:
    """Upper bound on ``|C|`` for ``T``-avoiding codes with ``max I(C) <= s``."""
    s = to_rational(s)
    for iv in T:
        if iv.hi > s:
            raise ValueError(f"avoided interval {iv} is not inside [-1, {format_rational(s)})")
    region = T.complement_in(-1, s)
    e = expand(f, n)
    pd = is_positive_definite(e, from_index=0)
    checks = {
        "sign": _sign_check(f, region, "nonpositive"),
        "positive_definite": {"ok": pd.ok, "offending": list(pd.offending)},
    }
    attain = {
        "zeros_in_region": _zeros_in(f, region),
        "vanishing_moments_at_equality": [i for i in range(1, len(e)) if e[i] > 0],
    }
    return Certificate("max-code", n, {"s": s}, T, f, e, _ratio(f, e), checks, factored, attain)


def certify_design(f: Poly, n: int, tau: int, T: IntervalSet, factored: str = "") -> Certificate:
    """Lower bound on ``|C|`` for ``T``-avoiding ``tau``-designs."""
    region = T.complement_in(-1, 1)
    e = expand(f, n)
    if f.degree <= tau:
        high = {"ok": True, "reason": f"deg f = {f.degree} <= tau"}
    else:
        bad = [i for i in range(tau + 1, len(e)) if e[i] > 0]
        high = {"ok": not bad, "offending": bad}
    checks = {
        "sign": _sign_check(f, region, "nonnegative"),
        "high_coefficients": high,
        "f0_positive": {"ok": e[0] > 0},
    }
    attain = {"zeros_in_region": _zeros_in(f, region)}
    return Certificate("design", n, {"tau": tau}, T, f, e, _ratio(f, e), checks, factored, attain)


def _poly_enclosure(f: Poly, lo: Fraction, hi: Fraction):
    x = mpmath.iv.mpf([to_interval(lo).a, to_interval(hi).b])
    acc = mpmath.iv.mpf(0)
    for c in reversed(f.coeffs):
        acc = acc * x + to_interval(c)
    return acc


def _grid_check(f: Poly, h: Potential, region: IntervalSet, budget: int = 4000) -> dict:
    """Certify ``h - f >= 0`` on ``region`` by interval bisection.

    Absolutely monotone ``h`` is nondecreasing, so ``h(lo)`` bounds ``h``
    from below on ``[lo, hi]``; the piece touching the singularity of a
    Riesz potential at 1 needs no upper bound.
    """
    with interval_precision(h.prec):
        # breadth first, so a genuine violation is met before any deep stall
        queue = deque((iv.lo, iv.hi) for iv in region)
        while queue:
            lo, hi = queue.popleft()
            h_lo = to_interval(h.derivative(lo)) if h.is_rational else h.derivative(lo)
            if (h_lo - _poly_enclosure(f, lo, hi)).a >= 0:
                continue
            mid = (lo + hi) / 2
            point = h.derivative(mid) if not (h.family == "riesz" and mid >= 1) else None
            if point is not None:
                diff = (to_interval(point) if h.is_rational else point) - to_interval(f(mid))
                if diff.b < 0:
                    return {"ok": False, "witness": format_rational(mid), "method": "interval bisection"}
            budget -= 1
            if budget <= 0 or lo == hi:
                raise CannotCertify(
                    f"h - f >= 0 undecided near [{format_rational(lo)}, {format_rational(hi)}]; "
                    "supply the interpolation nodes instead"
                )
            queue.append((lo, mid))
            queue.append((mid, hi))
    return {"ok": True, "method": "interval bisection", "region": str(region)}


def certify_energy(
    f: Poly | None,
    h: Potential,
    n: int,
    N: int,
    T: IntervalSet,
    nodes: Sequence | None = None,
    factored: str = "",
) -> Certificate | EnergyCertificate:
    """Energy lower bound for ``T``-avoiding ``N``-point codes.

    With ``nodes`` (an inner-product set) the interpolation route builds and
    checks the certificate itself; ``f`` must then be ``None`` or equal to
    the interpolant.  Otherwise ``f <= h`` is decided exactly for polynomial
    ``h`` and by interval bisection for the other families.
    """
    if nodes is not None:
        cert = build_energy_certificate(h, nodes, T, n, N)
        if f is not None and h.is_rational and cert.interpolant != f:
            cert.failures.append("supplied polynomial differs from the Hermite interpolant")
        return cert
    if f is None:
        raise ValueError("need a polynomial or interpolation nodes")
    region = T.complement_in(-1, 1)
    e = expand(f, n)
    pd = is_positive_definite(e, from_index=1)
    if h.family == "poly":
        below = _sign_check(h.param - f, region, "nonnegative")
    else:
        below = _grid_check(f, h, region)
    checks = {"below_potential": below, "positive_definite": {"ok": pd.ok, "offending": list(pd.offending)}}
    bound = N * N * e[0] - N * f(1)
    return Certificate("energy", n, {"N": N, "potential": h.describe()}, T, f, e, bound, checks, factored)


@dataclass(frozen=True)
class ThreeDistanceBound:
    bound: Fraction
    conditions: dict
    lp_bound: Fraction
    lp_valid: bool

    @property
    def consistent(self) -> bool:
        return self.lp_valid and self.lp_bound == self.bound


def dgs_three_distance_bound(n: int, alpha, beta, gamma) -> ThreeDistanceBound:
    """Cardinality bound for codes with inner products in ``{alpha, beta, gamma}``.

    Cross-checked against ``certify_max`` with ``(t - alpha)(t - beta)(t - gamma)``.
    """
    a, b, g = (to_rational(x) for x in (alpha, beta, gamma))
    if not (-1 <= a < b < g < 1):
        raise ValueError("need -1 <= alpha < beta < gamma < 1 (three distinct inner products)")
    s1, s2, s3 = a + b + g, a * b + b * g + g * a, a + b + g + n * a * b * g
    conds = {
        "alpha+beta+gamma <= 0": s1 <= 0,
        "alpha*beta+beta*gamma+gamma*alpha >= -3/(n+2)": s2 >= Fraction(-3, n + 2),
        "alpha+beta+gamma+n*alpha*beta*gamma < 0": s3 < 0,
    }
    failed = [k for k, ok in conds.items() if not ok]
    if failed:
        raise ValueError("condition violated: " + "; ".join(failed))
    bound = -n * (1 - a) * (1 - b) * (1 - g) / s3
    f = Poly.linear(a) * Poly.linear(b) * Poly.linear(g)
    cert = certify_max(f, n, g, avoid_set([(a, b)]))
    return ThreeDistanceBound(bound, conds, cert.bound, cert.valid)
