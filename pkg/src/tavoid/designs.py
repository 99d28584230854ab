"""Code combinatorics: inner products, distance distributions, moments, energy.

Pair enumeration is the only heavy step.  Dot products of the integer
points are formed block by block with a float32 matrix product, which is
exact here: coordinates are at most 8 in absolute value and the dimension
is 24, so every partial sum stays far below 2**24.  Only the upper
triangle of the Gram matrix is visited; blocks can be spread over threads.
"""

from __future__ import annotations

import contextlib
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import mpmath
import numpy as np

from .atlas.codes import GramCode
from .exactnum import IntervalSet, Poly, format_rational, to_rational
from .gegenbauer import basis_poly, expand

__all__ = [
    "CodeProfile",
    "Potential",
    "DistributionSolution",
    "profile",
    "profile_from_distribution",
    "moments",
    "design_strength",
    "is_t_avoiding",
    "energy",
    "solve_distribution",
    "verify_quadrature",
    "interval_precision",
]

DEFAULT_SEED = 20240601
_EXACT_FLOAT32_LIMIT = 1 << 24


@dataclass(frozen=True)
class CodeProfile:
    n: int
    N: int
    pair_counts: dict[Fraction, int] | None
    per_point: dict[int, dict[Fraction, int]] = field(default_factory=dict)
    distance_invariant: bool | None = None
    mode: str = "full"

    @property
    def antipodal(self) -> bool | None:
        """Each point has at most one antipode, so ``count(-1) == N`` decides it."""
        if self.pair_counts is None:
            return None
        return self.pair_counts.get(Fraction(-1), 0) == self.N

    @property
    def inner_products(self) -> tuple[Fraction, ...]:
        if self.pair_counts is not None:
            return tuple(sorted(t for t, c in self.pair_counts.items() if c))
        vals = set()
        for row in self.per_point.values():
            vals.update(t for t, c in row.items() if c)
        return tuple(sorted(vals))

    @property
    def s_max(self) -> Fraction:
        return max(self.inner_products)

    @property
    def distribution(self) -> tuple[int, ...] | None:
        """``F(C)`` ordered by increasing inner product, when the code is distance invariant."""
        if not self.distance_invariant:
            return None
        if self.pair_counts is not None:
            return tuple(self.pair_counts[t] // self.N for t in self.inner_products)
        row = next(iter(self.per_point.values()))
        return tuple(row.get(t, 0) for t in self.inner_products)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "N": self.N,
            "pairs": None
            if self.pair_counts is None
            else [[format_rational(t), c] for t, c in sorted(self.pair_counts.items())],
            "invariant": self.distance_invariant,
            "mode": self.mode,
        }
        if self.distance_invariant:
            out["distribution"] = list(self.distribution)
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "CodeProfile":
        pairs = data.get("pairs")
        counts = None if pairs is None else {to_rational(t): int(c) for t, c in pairs}
        return cls(int(data["n"]), int(data["N"]), counts, {}, data.get("invariant"), data.get("mode", "full"))


def _tally_block(points32: np.ndarray, start: int, stop: int, offset: int, width: int) -> tuple[np.ndarray, np.ndarray]:
    block = points32[start:stop]
    diag = (block @ block.T).astype(np.int32)
    diag += offset
    inner = np.bincount(diag.ravel(), minlength=width)
    if stop < points32.shape[0]:
        rest = (block @ points32[stop:].T).astype(np.int32)
        rest += offset
        outer = np.bincount(rest.ravel(), minlength=width)
    else:
        outer = np.zeros(width, dtype=np.int64)
    return inner, outer


def _raw_pair_counts(points: np.ndarray, jobs: int = 1, block: int = 2048) -> Counter:
    """Ordered-pair tally ``{raw dot: count}`` over distinct points."""
    pts = np.asarray(points)
    n = pts.shape[0]
    bound = int((pts.astype(np.int64) ** 2).sum(axis=1).max()) if n else 0
    if bound * 2 >= _EXACT_FLOAT32_LIMIT:
        raise OverflowError("dot products too large for exact float32 accumulation")
    p32 = pts.astype(np.float32)
    width = 2 * bound + 1
    starts = list(range(0, n, block))

    def work(s):
        return _tally_block(p32, s, min(s + block, n), bound, width)

    total = np.zeros(width, dtype=np.int64)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, starts))
    else:
        results = map(work, starts)
    for inner, outer in results:
        total += inner + 2 * outer
    # remove the diagonal x = y
    norms = (pts.astype(np.int64) ** 2).sum(axis=1)
    total -= np.bincount(norms + bound, minlength=width)
    return Counter({int(v) - bound: int(c) for v, c in enumerate(total) if c})


def _row_counts(code, idx: int) -> dict[Fraction, int]:
    if isinstance(code, GramCode):
        deg = int(code.adjacency[idx].sum())
        row = {code.adjacent: deg, code.nonadjacent: code.size - 1 - deg}
        return {t: c for t, c in row.items() if c}
    pts = code.points.astype(np.int64)
    raw = pts @ pts[idx]
    raw = np.delete(raw, idx)
    vals, counts = np.unique(raw, return_counts=True)
    out: dict[Fraction, int] = {}
    for v, c in zip(vals, counts):
        t = code.unit_inner(int(v))
        out[t] = out.get(t, 0) + int(c)
    return out


def profile(
    code,
    mode: str = "full",
    k: int = 8,
    seed: int = DEFAULT_SEED,
    tau: int | None = None,
    jobs: int = 1,
) -> CodeProfile:
    """Profile a code.

    ``mode="full"`` enumerates every ordered pair.  ``mode="sampled"``
    tallies ``k`` seeded points only; the code is then declared distance
    invariant (and pair counts reconstructed as ``N * A_t``) only when all
    sampled rows agree *and* the caller vouches for a design strength
    ``tau >= |I(C)| - 1``.
    """
    if code.size == 0:
        raise ValueError("empty code")
    n, N = code.dim, code.size
    if mode == "full":
        if isinstance(code, GramCode):
            adj = int(code.adjacency.sum())
            counts = {code.adjacent: adj, code.nonadjacent: N * (N - 1) - adj}
            counts = {t: c for t, c in counts.items() if c}
        else:
            raw = _raw_pair_counts(code.points, jobs=jobs)
            counts: dict[Fraction, int] = {}
            for v, c in raw.items():
                t = code.unit_inner(v)
                counts[t] = counts.get(t, 0) + c
        prof = CodeProfile(n, N, dict(sorted(counts.items())), {}, None, "full")
        invariant = None
        d = len(prof.inner_products)
        if d == 0 or design_strength(prof, max(d - 1, 0)) >= d - 1:
            invariant = True
        return CodeProfile(n, N, prof.pair_counts, {}, invariant, "full")
    if mode != "sampled":
        raise ValueError(f"unknown profile mode {mode!r}")
    rng = np.random.default_rng(seed)
    chosen = sorted(rng.choice(N, size=min(k, N), replace=False).tolist())
    rows = {i: _row_counts(code, i) for i in chosen}
    first = next(iter(rows.values()))
    agree = all(r == first for r in rows.values())
    d = len({t for r in rows.values() for t in r})
    if agree and tau is not None and tau >= d - 1:
        counts = {t: N * c for t, c in sorted(first.items())}
        return CodeProfile(n, N, counts, rows, True, "sampled")
    return CodeProfile(n, N, None, rows, False if not agree else None, "sampled")


def profile_from_distribution(n: int, inner_products: Sequence, distribution: Sequence[int]) -> CodeProfile:
    """Profile of a distance-invariant code known only by ``I(C)`` and ``F(C)``."""
    I = [to_rational(t) for t in inner_products]
    F = [int(a) for a in distribution]
    if len(I) != len(F):
        raise ValueError("inner products and distribution differ in length")
    N = sum(F) + 1
    counts = {t: N * a for t, a in sorted(zip(I, F))}
    return CodeProfile(n, N, counts, {}, True, "distribution")


def _need_counts(p: CodeProfile) -> dict[Fraction, int]:
    if p.pair_counts is None:
        raise ValueError("moments need full pair counts")
    return p.pair_counts


def moments(p: CodeProfile, upto: int) -> list[Fraction]:
    """``[M_1, ..., M_upto]`` with ``M_i = N + sum_t count(t) P_i(t)``."""
    counts = _need_counts(p)
    out = []
    for i in range(1, upto + 1):
        P = basis_poly(p.n, i)
        out.append(p.N + sum(c * P(t) for t, c in counts.items()))
    return out


def design_strength(p: CodeProfile, max_check: int) -> int:
    tau = 0
    for m in moments(p, max_check):
        if m != 0:
            break
        tau += 1
    return tau


@dataclass(frozen=True)
class AvoidanceVerdict:
    ok: bool
    offenders: tuple[Fraction, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_t_avoiding(p: CodeProfile, T: IntervalSet) -> AvoidanceVerdict:
    bad = tuple(t for t in p.inner_products if T.contains(t))
    return AvoidanceVerdict(not bad, bad)


@contextlib.contextmanager
def interval_precision(bits: int):
    """Temporarily set the working precision of ``mpmath.iv`` (process-wide)."""
    old = mpmath.iv.prec
    mpmath.iv.prec = bits
    try:
        yield
    finally:
        mpmath.iv.prec = old


def to_interval(x):
    x = to_rational(x)
    return mpmath.iv.mpf(x.numerator) / x.denominator


@dataclass(frozen=True)
class Potential:
    """Interaction potential.

    Families: ``riesz`` ``(2 - 2t)**(-k)`` for integer ``k >= 1``;
    ``exp`` ``e**(c t)`` for rational ``c > 0`` (evaluated as mpmath
    intervals at ``prec`` bits); ``poly`` for an explicit rational
    polynomial.  The first two are absolutely monotone on ``[-1, 1)``.
    """

    family: str
    param: object
    prec: int = 128

    def __post_init__(self):
        if self.family == "riesz":
            if int(self.param) != self.param or self.param < 1:
                raise ValueError("riesz exponent must be a positive integer")
            object.__setattr__(self, "param", int(self.param))
        elif self.family == "exp":
            c = to_rational(self.param)
            if c <= 0:
                raise ValueError("exp rate must be positive")
            object.__setattr__(self, "param", c)
        elif self.family == "poly":
            if not isinstance(self.param, Poly):
                raise TypeError("poly potential needs a Poly")
        else:
            raise ValueError(f"unknown potential family {self.family!r}")

    @classmethod
    def riesz(cls, k: int = 1) -> "Potential":
        return cls("riesz", k)

    @classmethod
    def exponential(cls, c) -> "Potential":
        return cls("exp", c)

    @classmethod
    def polynomial(cls, p: Poly) -> "Potential":
        return cls("poly", p)

    @property
    def is_rational(self) -> bool:
        return self.family != "exp"

    @property
    def absolutely_monotone(self) -> bool:
        if self.family != "poly":
            return True
        # on [-1, 1) all derivatives are nonnegative iff each Taylor polynomial at -1 has nonnegative coefficients
        shifted = Poly()
        for c in reversed(self.param.coeffs):
            shifted = shifted * Poly([-1, 1]) + c
        return all(c >= 0 for c in shifted.coeffs[1:])

    def __call__(self, t):
        return self.derivative(t, 0)

    def derivative(self, t, order: int = 0):
        """``h^{(order)}(t)``; exact Fraction for rational families, else an mpmath interval."""
        t = to_rational(t)
        if self.family == "riesz":
            k = self.param
            if t >= 1:
                raise ValueError("riesz potential is singular at t = 1")
            rising = 1
            for j in range(order):
                rising *= k + j
            return Fraction(rising * 2**order) / (2 - 2 * t) ** (k + order)
        if self.family == "poly":
            p = self.param
            for _ in range(order):
                p = p.derivative()
            return p(t)
        c = self.param
        with interval_precision(self.prec):
            return to_interval(c) ** order * mpmath.iv.exp(to_interval(c * t))

    def describe(self) -> str:
        if self.family == "riesz":
            return f"riesz:{self.param}"
        if self.family == "exp":
            return f"exp:{format_rational(self.param)}"
        return f"poly:{self.param}"


def energy(p: CodeProfile, h: Potential):
    """``sum_{x != y} h(x.y)``, exact for rational families."""
    counts = _need_counts(p)
    if h.is_rational:
        return sum(c * h(t) for t, c in counts.items())
    with interval_precision(h.prec):
        total = mpmath.iv.mpf(0)
        for t, c in counts.items():
            total += c * h(t)
        return total


def _solve(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    m = len(mat)
    a = [row[:] + [b] for row, b in zip(mat, rhs)]
    for c in range(m):
        piv = next((r for r in range(c, m) if a[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular quadrature system (duplicate nodes?)")
        a[c], a[piv] = a[piv], a[c]
        for r in range(m):
            if r != c and a[r][c] != 0:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [a[i][m] / a[i][i] for i in range(m)]


@dataclass(frozen=True)
class DistributionSolution:
    nodes: tuple[Fraction, ...]
    frequencies: tuple[Fraction, ...]
    issues: tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return not self.issues

    def as_ints(self) -> tuple[int, ...]:
        if not self.consistent:
            raise ValueError("; ".join(self.issues))
        return tuple(int(a) for a in self.frequencies)


def solve_distribution(I: Sequence, N: int, n: int, tau: int) -> DistributionSolution:
    """Frequencies ``A_t`` from the quadrature ``N f_0 = f(1) + sum A_t f(t)``.

    Test polynomials ``1, t, ..., t^(d-1)`` give a Vandermonde system.
    """
    nodes = tuple(sorted(to_rational(t) for t in I))
    d = len(nodes)
    if len(set(nodes)) != d:
        raise ValueError("singular quadrature system: duplicate nodes")
    if 1 in nodes:
        raise ValueError("node 1 is implicit and must not be listed")
    if tau < d - 1:
        raise ValueError(f"need tau >= |I| - 1 = {d - 1}, got tau = {tau}")
    mat, rhs = [], []
    for j in range(d):
        mono = Poly([0] * j + [1])
        f0 = expand(mono, n)[0]
        mat.append([t**j for t in nodes])
        rhs.append(N * f0 - 1)
    freqs = tuple(_solve(mat, rhs))
    issues = []
    for t, a in zip(nodes, freqs):
        if a.denominator != 1:
            issues.append(f"non-integral frequency {format_rational(a)} at {format_rational(t)}")
        elif a < 0:
            issues.append(f"negative frequency {a} at {format_rational(t)}")
    return DistributionSolution(nodes, freqs, tuple(issues))


def verify_quadrature(p: CodeProfile, f: Poly, tau: int) -> bool:
    """Aggregate form of ``N f_0 = sum_y f(x.y)``: ``N^2 f_0 = N f(1) + sum_pairs f``."""
    if f.degree > tau:
        raise ValueError(f"deg f = {f.degree} exceeds tau = {tau}")
    counts = _need_counts(p)
    f0 = expand(f, p.n)[0]
    return p.N * p.N * f0 == p.N * f(1) + sum(c * f(t) for t, c in counts.items())
