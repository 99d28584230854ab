"""Normalized Gegenbauer polynomials and exact change of basis.

``P_i^{(n)}`` is normalized by ``P_i(1) = 1`` and generated from

    t * P_i = ((i + n - 2) * P_{i+1} + i * P_{i-1}) / (2i + n - 2),

so every coefficient stays rational.  Expansion never integrates: it runs
Horner's scheme inside the Gegenbauer basis, multiplying by ``t`` with the
recurrence above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import Poly, format_rational, to_rational

__all__ = [
    "basis_poly",
    "GegenbauerExpansion",
    "expand",
    "is_positive_definite",
    "PositivityVerdict",
]


def _check_dim(n: int) -> None:
    if int(n) != n or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n}")


def _up(n: int, i: int) -> Fraction:
    # coefficient of P_{i+1} in t * P_i
    if i == 0:
        return Fraction(1)
    return Fraction(i + n - 2, 2 * i + n - 2)


def _down(n: int, i: int) -> Fraction:
    # coefficient of P_{i-1} in t * P_i
    return Fraction(i, 2 * i + n - 2)


@lru_cache(maxsize=None)
def basis_poly(n: int, i: int) -> Poly:
    """``P_i^{(n)}`` as a dense polynomial."""
    _check_dim(n)
    if i < 0:
        raise ValueError("index must be nonnegative")
    if i == 0:
        return Poly.const(1)
    if i == 1:
        return Poly.identity()
    # t P_{i-1} = up * P_i + down * P_{i-2}
    j = i - 1
    prev, prevprev = basis_poly(n, j), basis_poly(n, j - 1)
    return (Poly.identity() * prev - prevprev.scale(_down(n, j))).scale(1 / _up(n, j))


def _times_t(n: int, coeffs: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        out[i + 1] += _up(n, i) * c
        if i > 0:
            out[i - 1] += _down(n, i) * c
    return out


@dataclass(frozen=True)
class GegenbauerExpansion:
    n: int
    coefficients: tuple[Fraction, ...]

    def __getitem__(self, i: int) -> Fraction:
        if i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def to_poly(self) -> Poly:
        out = Poly()
        for i, c in enumerate(self.coefficients):
            if c:
                out = out + basis_poly(self.n, i).scale(c)
        return out

    def as_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients]


def expand(p: Poly, n: int) -> GegenbauerExpansion:
    """Coefficients ``f_i`` with ``p = sum f_i P_i^{(n)}``, exactly."""
    _check_dim(n)
    if p.is_zero():
        return GegenbauerExpansion(n, ())
    acc: list[Fraction] = [p.coeffs[-1]]
    for c in reversed(p.coeffs[:-1]):
        acc = _times_t(n, acc)
        acc[0] += c
    while acc and acc[-1] == 0:
        acc.pop()
    return GegenbauerExpansion(n, tuple(acc))


@dataclass(frozen=True)
class PositivityVerdict:
    ok: bool
    offending: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_positive_definite(e: GegenbauerExpansion, from_index: int = 0) -> PositivityVerdict:
    """All ``f_i >= 0`` for ``i >= from_index``; from index 0 also ``f_0 > 0``."""
    bad = [i for i, c in enumerate(e.coefficients) if i >= from_index and c < 0]
    if from_index == 0 and e[0] <= 0 and 0 not in bad:
        bad.insert(0, 0)
    return PositivityVerdict(not bad, tuple(bad))
