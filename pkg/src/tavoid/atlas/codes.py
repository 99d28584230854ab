"""Spherical codes with exact inner products.

Three carriers share one small protocol (``dim``, ``size``, ``unit_inner``):

* :class:`PointCode` -- integer vectors of a common squared norm ``scale``;
  the unit inner product of ``x, y`` is ``x.y / scale``.
* :class:`DerivedCode` -- the points of an integer root code having
  prescribed dot products with a list of base vectors, viewed inside the
  orthogonal complement of the bases.  Coordinates in that complement are
  never formed: if every member ``y`` has ``B y = c`` and ``G = B B^T``,
  then the projected inner product is ``y.z - c^T G^{-1} c`` for all
  members, so a single rational offset carries the whole projection.
* :class:`GramCode` -- a code known only through a two-valued Gram
  pattern (spectral embeddings of strongly regular graphs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..exactnum import format_rational, to_rational

__all__ = ["PointCode", "DerivedCode", "GramCode", "derive", "sphere_embed_binary"]


def _solve_exact(gram: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    m = len(gram)
    a = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(gram, rhs)]
    for c in range(m):
        p = next((r for r in range(c, m) if a[r][c] != 0), None)
        if p is None:
            raise ValueError("base vectors are linearly dependent")
        a[c], a[p] = a[p], a[c]
        for r in range(m):
            if r != c and a[r][c] != 0:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [a[i][m] / a[i][i] for i in range(m)]


def _as_int_matrix(points) -> np.ndarray:
    arr = np.asarray(points)
    if arr.ndim != 2:
        raise ValueError("points must form a 2-d array")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise ValueError("points must have integer coordinates")
    big = int(np.abs(arr).max()) if arr.size else 0
    dtype = np.int8 if big < 128 else np.int32
    return arr.astype(dtype)


@dataclass(frozen=True, eq=False)
class PointCode:
    """Integer vectors with common squared norm ``scale``."""

    dim: int
    scale: int
    points: np.ndarray = field(repr=False)
    name: str = ""

    def __post_init__(self):
        pts = _as_int_matrix(self.points)
        if pts.shape[1] != self.dim:
            raise ValueError(f"points have {pts.shape[1]} coordinates, expected {self.dim}")
        norms = (pts.astype(np.int64) ** 2).sum(axis=1)
        if pts.shape[0] and not np.all(norms == self.scale):
            raise ValueError(f"not all points have squared norm {self.scale}")
        if pts.shape[0] != np.unique(pts, axis=0).shape[0]:
            raise ValueError("duplicate points")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def size(self) -> int:
        return self.points.shape[0]

    def __len__(self) -> int:
        return self.size

    offset = Fraction(0)

    @property
    def bases(self) -> tuple:
        return ()

    def unit_inner(self, raw) -> Fraction:
        """Unit inner product for a raw integer dot product."""
        return Fraction(int(raw), self.scale)

    def is_antipodal(self) -> bool:
        have = {p.tobytes() for p in self.points}
        return all((-p).tobytes() in have for p in self.points)

    def index_of(self, vec) -> int:
        vec = np.asarray(vec, dtype=self.points.dtype)
        hits = np.nonzero(np.all(self.points == vec, axis=1))[0]
        if hits.size == 0:
            raise KeyError("vector is not a point of the code")
        return int(hits[0])


@dataclass(frozen=True, eq=False)
class DerivedCode:
    """Members of a root code at fixed dot products with some base vectors.

    ``alpha_sq`` and ``alpha_sign`` describe the last derivation step (the
    cosine against the most recent base inside the previous complement).
    """

    root_dim: int
    scale: int
    points: np.ndarray = field(repr=False)
    bases: tuple[tuple[int, ...], ...]
    dots: tuple[int, ...]
    alpha_sq: Fraction
    alpha_sign: int
    name: str = ""
    parent: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        pts = _as_int_matrix(self.points)
        if pts.shape[0] == 0:
            raise ValueError("no points at the requested angle")
        b = np.array(self.bases, dtype=np.int64)
        if not np.all(pts.astype(np.int64) @ b.T == np.array(self.dots)):
            raise ValueError("members do not have the recorded dot products with the bases")
        norms = (pts.astype(np.int64) ** 2).sum(axis=1)
        if not np.all(norms == self.scale):
            raise ValueError(f"not all members have squared norm {self.scale}")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "alpha_sq", to_rational(self.alpha_sq))

    @property
    def dim(self) -> int:
        return self.root_dim - len(self.bases)

    @property
    def size(self) -> int:
        return self.points.shape[0]

    def __len__(self) -> int:
        return self.size

    @property
    def base_gram(self) -> list[list[Fraction]]:
        return [[Fraction(int(np.dot(a, b))) for b in self.bases] for a in self.bases]

    @property
    def offset(self) -> Fraction:
        """``c^T G^{-1} c``: squared length of each member's projection onto the bases."""
        c = [Fraction(d) for d in self.dots]
        return sum(x * y for x, y in zip(c, _solve_exact(self.base_gram, c)))

    @property
    def alpha(self) -> Fraction | None:
        """The last-step cosine when it is rational, else ``None``."""
        num, den = self.alpha_sq.numerator, self.alpha_sq.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return self.alpha_sign * Fraction(rn, rd)
        return None

    def unit_inner(self, raw) -> Fraction:
        k = self.offset
        return (int(raw) - k) / (self.scale - k)

    def is_antipodal(self) -> bool:
        """Antipodal inside the complement: ``y -> 2 proj(y) - y`` preserves the set."""
        have = {p.tobytes() for p in self.points}
        proj = _projection_numerators(self)
        if proj is None:
            return False
        num, den = proj
        for p in self.points:
            refl = 2 * num - den * p.astype(np.int64)
            if np.any(refl % den):
                return False
            if (refl // den).astype(self.points.dtype).tobytes() not in have:
                return False
        return True


def _projection_numerators(code: DerivedCode):
    """The common projection of members onto span(bases) as ``(num_vec, den)``."""
    c = [Fraction(d) for d in code.dots]
    coef = _solve_exact(code.base_gram, c)
    den = math.lcm(*(x.denominator for x in coef))
    num = sum(int(x * den) * np.array(b, dtype=np.int64) for x, b in zip(coef, code.bases))
    return num, den


@dataclass(frozen=True, eq=False)
class GramCode:
    """Two-distance code: ``adjacent`` / ``nonadjacent`` inner products by a 0/1 pattern."""

    dim: int
    adjacency: np.ndarray = field(repr=False)
    adjacent: Fraction
    nonadjacent: Fraction
    name: str = ""

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=np.uint8)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if np.any(a != a.T) or np.any(np.diag(a)):
            raise ValueError("adjacency must be symmetric with zero diagonal")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)
        object.__setattr__(self, "adjacent", to_rational(self.adjacent))
        object.__setattr__(self, "nonadjacent", to_rational(self.nonadjacent))

    @property
    def size(self) -> int:
        return self.adjacency.shape[0]

    def __len__(self) -> int:
        return self.size

    def gram(self) -> list[list[Fraction]]:
        n = self.size
        return [
            [Fraction(1) if i == j else (self.adjacent if self.adjacency[i, j] else self.nonadjacent) for j in range(n)]
            for i in range(n)
        ]

    def is_antipodal(self) -> bool:
        return False


def sphere_embed_binary(code) -> PointCode:
    """Codewords ``b -> 1 - 2b``; distance ``d`` maps to inner product ``1 - 2d/len``."""
    words = code.codewords().astype(np.int8)
    return PointCode(code.length, code.length, 1 - 2 * words)


def derive(parent, base: Sequence[int], alpha=None, *, alpha_sq=None, sign: int = 1, name: str = "") -> DerivedCode:
    """Section of ``parent`` at unit inner product ``alpha`` with ``base``.

    ``base`` is an integer vector in the root coordinates (a member of the
    parent, or any lattice vector).  Irrational cosines are passed as
    ``alpha_sq`` with a ``sign``; membership is decided on integer dot
    products, so no radicals are ever formed.
    """
    if (alpha is None) == (alpha_sq is None):
        raise ValueError("give exactly one of alpha or alpha_sq")
    if alpha is not None:
        alpha = to_rational(alpha)
        alpha_sq, sign = alpha * alpha, (1 if alpha >= 0 else -1)
    alpha_sq = to_rational(alpha_sq)
    if not 0 <= alpha_sq < 1:
        raise ValueError("need 0 <= alpha^2 < 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    base = np.asarray(base, dtype=np.int64)
    if isinstance(parent, PointCode):
        bases, dots, root_dim = (), (), parent.dim
    elif isinstance(parent, DerivedCode):
        bases, dots, root_dim = parent.bases, parent.dots, parent.root_dim
    else:
        raise TypeError("can only derive from PointCode or DerivedCode")
    if base.shape != (root_dim,):
        raise ValueError("base has the wrong number of coordinates")
    scale = parent.scale
    c_y = [Fraction(d) for d in dots]
    if bases:
        gram = [[Fraction(int(np.dot(a, b))) for b in bases] for a in bases]
        c_b = [Fraction(int(np.dot(b, base))) for b in bases]
        sol = _solve_exact(gram, c_b)
        cross = sum(x * y for x, y in zip(c_y, sol))
        base_perp = int(base @ base) - sum(x * y for x, y in zip(c_b, sol))
        k = sum(x * y for x, y in zip(c_y, _solve_exact(gram, c_y)))
    else:
        cross, base_perp, k = Fraction(0), Fraction(int(base @ base)), Fraction(0)
    if base_perp <= 0:
        raise ValueError("base lies in the span of the previous bases")
    # (y.b - cross)^2 = alpha^2 (scale - k) |b_perp|^2
    target_sq = alpha_sq * (scale - k) * base_perp
    rn, rd = math.isqrt(target_sq.numerator), math.isqrt(target_sq.denominator)
    if rn * rn != target_sq.numerator or rd * rd != target_sq.denominator:
        raise ValueError("no points at the requested angle (irrational dot product)")
    want = cross + sign * Fraction(rn, rd)
    if want.denominator != 1:
        raise ValueError("no points at the requested angle (non-integral dot product)")
    raw = parent.points.astype(np.int64) @ base
    members = parent.points[raw == int(want)]
    if members.shape[0] == 0:
        raise ValueError("no points at the requested angle")
    return DerivedCode(
        root_dim=root_dim,
        scale=scale,
        points=members,
        bases=tuple(bases) + (tuple(int(x) for x in base),),
        dots=tuple(dots) + (int(want),),
        alpha_sq=alpha_sq,
        alpha_sign=sign,
        name=name,
        parent=parent,
    )


def describe(code) -> dict:
    """Small JSON-able summary used by the CLI."""
    out = {"name": code.name, "dim": code.dim, "N": code.size}
    if isinstance(code, DerivedCode):
        out["alpha_sq"] = format_rational(code.alpha_sq)
        if code.alpha is not None:
            out["alpha"] = format_rational(code.alpha)
    return out
