"""Exact rational polynomials, Sturm root counting and sign certification.

Scalars are :class:`fractions.Fraction` throughout; nothing in this module
ever rounds.  Polynomials are dense and immutable, coefficient ``i`` being
the coefficient of ``t**i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "to_rational",
    "format_rational",
    "Poly",
    "Interval",
    "IntervalSet",
    "poly_from_factors",
    "poly_eval",
    "squarefree_decomposition",
    "sturm_sequence",
    "count_roots",
    "isolate_roots",
    "rational_roots",
    "SignVerdict",
    "verify_sign",
]


def to_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: a float reaching this module is always a bug.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot make an exact rational from {type(x).__name__}")


def format_rational(x: Fraction) -> str:
    """String form ``p/q`` with the denominator omitted when it is 1."""
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Poly:
    """Dense univariate polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def identity(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def linear(cls, root) -> "Poly":
        """The monic factor ``t - root``."""
        return cls([-to_rational(root), 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, t) -> Fraction:
        t = to_rational(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(format_rational(c) + (("*" + mono) if mono else ""))
        return " + ".join(reversed(terms)).replace("+ -", "- ")

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Poly":
        c = to_rational(c)
        return Poly(c * x for x in self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        lead = other.leading
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()


def poly_from_factors(factors: Sequence[tuple], leading=1) -> Poly:
    """Expand ``leading * prod (t - root)**mult`` into dense coefficients."""
    out = Poly.const(leading)
    for root, mult in factors:
        if int(mult) < 1:
            raise ValueError(f"multiplicity must be >= 1, got {mult}")
        out = out * Poly.linear(root) ** int(mult)
    return out


def poly_eval(p: Poly, t) -> Fraction:
    return p(t)


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic, pairwise coprime ``(q_k, k)`` with p ~ prod q_k**k.

    Constant factors are dropped; trivial ``q_k`` are omitted.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free decomposition")
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = p.gcd(dp)
    b = p // a
    c = dp // a
    out = []
    k = 1
    while b.degree > 0:
        d = c - b.derivative()
        g = b.gcd(d)
        if g.degree > 0:
            out.append((g, k))
        b = b // g
        c = d // g
        k += 1
    return out


def _squarefree_part(p: Poly) -> Poly:
    return (p // p.gcd(p.derivative())).monic()


def sturm_sequence(p: Poly) -> list[Poly]:
    """Sturm chain of the square-free part of ``p``."""
    if p.is_zero():
        raise ValueError("zero polynomial has no Sturm sequence")
    q = _squarefree_part(p)
    seq = [q, q.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        seq.append(-(seq[-2] % seq[-1]))
    if seq[-1].is_zero():
        seq.pop()
    return seq


def _variations(seq: Sequence[Poly], x: Fraction) -> int:
    signs = [v for v in (s(x) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(p: Poly, interval: tuple, lo_open: bool = False, hi_open: bool = False) -> int:
    """Number of distinct real roots of ``p`` in the interval.

    ``interval`` is ``(lo, hi)``; the flags choose which ends are open.
    """
    lo, hi = (to_rational(x) for x in interval)
    seq = sturm_sequence(p)
    if lo > hi:
        return 0
    q = seq[0]
    if lo == hi:
        return int(q(lo) == 0 and not lo_open and not hi_open)
    # For square-free q, V(lo) - V(hi) counts roots in (lo, hi].
    n = _variations(seq, lo) - _variations(seq, hi)
    if q(lo) == 0 and not lo_open:
        n += 1
    if q(hi) == 0 and hi_open:
        n -= 1
    return n


@dataclass(frozen=True)
class _Root:
    """A root known exactly (lo == hi) or isolated in the open interval (lo, hi)."""

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


def _isolate(seq, lo: Fraction, hi: Fraction) -> list[_Root]:
    if lo >= hi:
        return []
    q = seq[0]
    n = _variations(seq, lo) - _variations(seq, hi) - (1 if q(hi) == 0 else 0)
    if n == 0:
        return []
    if n == 1:
        return [_Root(lo, hi)]
    mid = (lo + hi) / 2
    if q(mid) == 0:
        return _isolate(seq, lo, mid) + [_Root(mid, mid)] + _isolate(seq, mid, hi)
    return _isolate(seq, lo, mid) + _isolate(seq, mid, hi)


def isolate_roots(p: Poly, lo, hi) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct roots of ``p`` in the open ``(lo, hi)``.

    A pair ``(r, r)`` is an exact rational root; otherwise the pair bounds
    an open interval holding exactly one root.
    """
    seq = sturm_sequence(p)
    return [(r.lo, r.hi) for r in _isolate(seq, to_rational(lo), to_rational(hi))]


def _simplest_between(a: Fraction, b: Fraction) -> Fraction:
    """Rational with the smallest denominator in the open interval ``(a, b)``."""
    import math

    if a < 0 < b:
        return Fraction(0)
    if b <= 0:
        return -_simplest_between(-b, -a)
    fl = math.floor(a)
    if fl + 1 < b:
        return Fraction(fl + 1)
    if a == fl:
        return fl + Fraction(1, math.floor(1 / (b - fl)) + 1)
    # a and b share the integer part: recurse on reciprocals of the fractional parts
    return fl + 1 / _simplest_between(1 / (b - fl), 1 / (a - fl))


def rational_roots(p: Poly, lo, hi, max_steps: int = 60) -> tuple[list[Fraction], list[tuple[Fraction, Fraction]]]:
    """Distinct roots of ``p`` in the closed ``[lo, hi]``.

    Returns ``(rational roots, isolating intervals of roots not found to be
    rational)``.  Each isolating interval is shrunk around its simplest
    rational point until that point is a root or ``max_steps`` runs out.
    """
    lo, hi = to_rational(lo), to_rational(hi)
    seq = sturm_sequence(p)
    q = seq[0]
    exact = [x for x in sorted({lo, hi}) if q(x) == 0]
    loose = []
    for r in _isolate(seq, lo, hi):
        if r.exact:
            exact.append(r.lo)
            continue
        a, b = r.lo, r.hi
        for _ in range(max_steps):
            x = _simplest_between(a, b)
            if q(x) == 0:
                exact.append(x)
                break
            if _variations(seq, a) - _variations(seq, x) == 1:
                b = x
            else:
                a = x
        else:
            loose.append((a, b))
    return sorted(set(exact)), loose


def _point_between(q: Poly, seq, left: _Root, right: _Root) -> Fraction:
    """A non-root of ``q`` strictly between the roots held by two neighbours.

    Boundaries of the region are passed as exact items; the neighbouring
    isolating intervals are bisected until a gap opens up.
    """
    while True:
        a, b = left.hi, right.lo
        if a < b:
            return (a + b) / 2
        # a == b: shared endpoint
        if q(a) != 0:
            return a
        if not right.exact:
            mid = (right.lo + right.hi) / 2
            if q(mid) == 0:
                return (a + mid) / 2
            n = _variations(seq, mid) - _variations(seq, right.hi) - (1 if q(right.hi) == 0 else 0)
            if n == 1:
                return mid
            right = _Root(right.lo, mid)
        elif not left.exact:
            mid = (left.lo + left.hi) / 2
            if q(mid) == 0:
                return (mid + b) / 2
            n = _variations(seq, left.lo) - _variations(seq, mid)
            if n == 1:
                return mid
            left = _Root(mid, left.hi)
        else:
            raise AssertionError("two exact roots at the same point")


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    lo_open: bool = True
    hi_open: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lo", to_rational(self.lo))
        object.__setattr__(self, "hi", to_rational(self.hi))
        if self.lo > self.hi or (self.lo == self.hi and (self.lo_open or self.hi_open)):
            raise ValueError(f"empty interval {self}")

    def contains(self, t) -> bool:
        t = to_rational(t)
        above = t > self.lo if self.lo_open else t >= self.lo
        below = t < self.hi if self.hi_open else t <= self.hi
        return above and below

    def __str__(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{format_rational(self.lo)},{format_rational(self.hi)}{right}"


class IntervalSet:
    """Sorted union of pairwise disjoint intervals."""

    def __init__(self, intervals: Iterable[Interval] = ()):
        ivs = sorted(intervals, key=lambda iv: (iv.lo, iv.lo_open))
        for a, b in zip(ivs, ivs[1:]):
            if b.lo < a.hi or (b.lo == a.hi and not a.hi_open and not b.lo_open):
                raise ValueError(f"intervals {a} and {b} overlap")
        self.intervals: tuple[Interval, ...] = tuple(ivs)

    @classmethod
    def open_union(cls, pairs: Iterable[tuple]) -> "IntervalSet":
        """Union of open intervals, the only kind of avoided set ``T``."""
        ivs = [Interval(a, b, True, True) for a, b in pairs]
        for iv in ivs:
            if iv.lo < -1 or iv.hi > 1:
                raise ValueError(f"avoided interval {iv} leaves [-1, 1]")
        return cls(ivs)

    @classmethod
    def closed(cls, lo, hi) -> "IntervalSet":
        return cls([Interval(lo, hi, False, False)])

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalSet) and self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __str__(self) -> str:
        return "∪".join(str(iv) for iv in self.intervals) if self.intervals else "∅"

    __repr__ = __str__

    def contains(self, t) -> bool:
        return any(iv.contains(t) for iv in self.intervals)

    def pairs(self) -> list[tuple[Fraction, Fraction]]:
        return [(iv.lo, iv.hi) for iv in self.intervals]

    def complement_in(self, lo, hi) -> "IntervalSet":
        """Closed pieces of ``[lo, hi]`` minus this (open) set.

        Degenerate single points are kept: they are genuine members of the
        region when two avoided intervals share an endpoint.
        """
        lo, hi = to_rational(lo), to_rational(hi)
        pieces = []
        cur = lo
        for iv in self.intervals:
            if not (iv.lo_open and iv.hi_open):
                raise ValueError("complement_in expects open intervals")
            if iv.hi <= cur:
                continue
            if iv.lo >= hi:
                break
            if iv.lo >= cur:
                pieces.append(Interval(cur, iv.lo, False, False))
            cur = iv.hi
        if cur <= hi:
            pieces.append(Interval(cur, hi, False, False))
        return IntervalSet(pieces)


@dataclass(frozen=True)
class SignVerdict:
    ok: bool
    witness: Fraction | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_sign(p: Poly, region, sign: str) -> SignVerdict:
    """Prove ``p >= 0`` (``sign="nonnegative"``) or ``p <= 0`` on a closed region.

    ``region`` is an :class:`IntervalSet` of closed intervals or a sequence
    of ``(lo, hi)`` pairs.  On failure the verdict carries a rational witness.
    """
    if sign not in ("nonnegative", "nonpositive"):
        raise ValueError(f"unknown sign requirement {sign!r}")
    want = 1 if sign == "nonnegative" else -1

    def bad(v: Fraction) -> bool:
        return v * want < 0

    if isinstance(region, IntervalSet):
        pieces = [(iv.lo, iv.hi) for iv in region]
    else:
        pieces = [(to_rational(a), to_rational(b)) for a, b in region]
    if not pieces:
        raise ValueError("empty region")
    if p.is_zero():
        return SignVerdict(True, reason="zero polynomial")
    odd_part = Poly.const(1)
    for q, k in squarefree_decomposition(p):
        if k % 2:
            odd_part = odd_part * q
    seq = sturm_sequence(p)
    q = seq[0]
    for lo, hi in pieces:
        for end in (lo, hi):
            if bad(p(end)):
                return SignVerdict(False, end, f"wrong sign at endpoint {format_rational(end)}")
        if lo == hi:
            continue
        items = [_Root(lo, lo)] + _isolate(seq, lo, hi) + [_Root(hi, hi)]
        for left, right in zip(items, items[1:]):
            s = _point_between(q, seq, left, right)
            if bad(p(s)):
                return SignVerdict(False, s, f"wrong sign at {format_rational(s)}")
        if odd_part.degree > 0 and count_roots(odd_part, (lo, hi), True, True):
            # unreachable when sampling is sound, kept as an independent guard
            return SignVerdict(False, None, "odd-multiplicity root inside the region")
    return SignVerdict(True)
