"""Strongly regular graphs and their two spectral sphere embeddings."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

import numpy as np

from .codes import GramCode

__all__ = [
    "SRGParams",
    "read_adjacency",
    "builtin_graph",
    "params_from_adjacency",
    "srg_embedding",
    "embedding_pq",
    "exact_psd_rank",
]


@dataclass(frozen=True)
class SRGParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.k * (self.k - self.lam - 1) != (self.v - self.k - 1) * self.mu:
            raise ValueError(f"infeasible SRG parameters {self}: k(k-lambda-1) != (v-k-1)mu")

    @property
    def eigenvalues(self) -> tuple[int, int]:
        """``(e1, e2)`` with ``e1 >= 0 > e2``; must be integers."""
        b = self.lam - self.mu
        disc = b * b + 4 * (self.k - self.mu)
        r = math.isqrt(disc)
        if r * r != disc or (b + r) % 2:
            raise ValueError(f"eigenvalues of {self} are not rational integers")
        return (b + r) // 2, (b - r) // 2

    @property
    def multiplicities(self) -> tuple[int, int]:
        e1, e2 = self.eigenvalues
        # trace conditions: 1 + n1 + n2 = v and k + n1 e1 + n2 e2 = 0
        n1 = Fraction(-self.k - (self.v - 1) * e2, e1 - e2)
        n2 = self.v - 1 - n1
        if n1.denominator != 1 or n2.denominator != 1:
            raise ValueError("non-integral eigenvalue multiplicities")
        return int(n1), int(n2)


def read_adjacency(path) -> np.ndarray:
    """Plain 0/1 matrix, one row per line; whitespace between digits is optional."""
    rows = []
    for line in Path(path).read_text().splitlines():
        digits = [c for c in line if c in "01"]
        if digits:
            rows.append([int(c) for c in digits])
    a = np.array(rows, dtype=np.uint8)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{path}: adjacency matrix is not square")
    return a


def builtin_graph(name: str) -> np.ndarray:
    ref = resources.files("tavoid.atlas") / "data" / f"{name}.txt"
    with resources.as_file(ref) as p:
        return read_adjacency(p)


def params_from_adjacency(a: np.ndarray) -> SRGParams:
    a = np.asarray(a, dtype=np.int64)
    v = a.shape[0]
    deg = set(a.sum(axis=1).tolist())
    if len(deg) != 1:
        raise ValueError("graph is not regular")
    a2 = a @ a
    off = ~np.eye(v, dtype=bool)
    lam = set(a2[(a == 1) & off].tolist())
    mu = set(a2[(a == 0) & off].tolist())
    if len(lam) > 1 or len(mu) > 1:
        raise ValueError("graph is not strongly regular")
    return SRGParams(v, deg.pop(), lam.pop() if lam else 0, mu.pop() if mu else 0)


def embedding_pq(p: SRGParams, which: str) -> tuple[int, Fraction, Fraction]:
    """``(dim, adjacent value, non-adjacent value)`` of the chosen embedding."""
    e1, e2 = p.eigenvalues
    n1, n2 = p.multiplicities
    if which == "first":
        return n1, Fraction(e1, p.k), Fraction(-(1 + e1), p.v - p.k - 1)
    if which == "second":
        return n2, Fraction(e2, p.k), Fraction(-(1 + e2), p.v - p.k - 1)
    raise ValueError("which must be 'first' or 'second'")


def srg_embedding(p: SRGParams, adjacency, which: str, name: str = "") -> GramCode:
    a = np.asarray(adjacency, dtype=np.uint8)
    if params_from_adjacency(a) != p:
        raise ValueError(f"adjacency does not have parameters {p}")
    dim, adj, non = embedding_pq(p, which)
    return GramCode(dim, a, adj, non, name=name or f"srg{(p.v, p.k, p.lam, p.mu)}:{which}")


def exact_psd_rank(gram: list[list[Fraction]]) -> tuple[bool, int]:
    """Exact symmetric elimination: ``(is positive semidefinite, rank)``."""
    a = [row[:] for row in gram]
    n = len(a)
    rank = 0
    for c in range(n):
        piv = a[c][c]
        if piv < 0:
            return False, rank
        if piv == 0:
            if any(a[c][j] != 0 for j in range(c, n)):
                return False, rank
            continue
        rank += 1
        for r in range(c + 1, n):
            f = a[r][c] / piv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return True, rank
