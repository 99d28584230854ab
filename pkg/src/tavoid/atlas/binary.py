"""Binary linear codes over GF(2): Golay codes and first-order Reed-Muller."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

__all__ = [
    "BinaryCode",
    "gf2_rank",
    "gf2_nullspace",
    "golay23",
    "golay24",
    "dual_golay23",
    "reed_muller1",
]

# x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1 divides x^23 - 1 over GF(2)
_GOLAY_GENERATOR = (1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1)


def _rref(rows: np.ndarray) -> tuple[np.ndarray, list[int]]:
    m = (np.asarray(rows, dtype=np.uint8) & 1).copy()
    pivots: list[int] = []
    r = 0
    for c in range(m.shape[1]):
        hits = np.nonzero(m[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        m[others] ^= m[r]
        pivots.append(c)
        r += 1
        if r == m.shape[0]:
            break
    return m[:r], pivots


def gf2_rank(rows) -> int:
    rows = np.asarray(rows, dtype=np.uint8)
    if rows.size == 0:
        return 0
    return len(_rref(rows)[1])


def gf2_nullspace(rows) -> np.ndarray:
    """Basis (as rows) of ``{x : rows @ x = 0 mod 2}``."""
    rows = np.asarray(rows, dtype=np.uint8)
    n = rows.shape[1]
    red, pivots = _rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, p in enumerate(pivots):
            basis[k, p] = red[i, f]
    return basis


@dataclass(frozen=True)
class BinaryCode:
    """Linear binary code given by independent generator rows."""

    length: int
    generator: np.ndarray = field(repr=False)

    def __post_init__(self):
        g = np.asarray(self.generator, dtype=np.uint8) & 1
        if g.ndim != 2 or g.shape[1] != self.length:
            raise ValueError("generator must be a (k, length) 0/1 matrix")
        if gf2_rank(g) != g.shape[0]:
            raise ValueError("generator rows are not independent over GF(2)")
        object.__setattr__(self, "generator", g)

    @property
    def dimension(self) -> int:
        return self.generator.shape[0]

    def __len__(self) -> int:
        return 1 << self.dimension

    def codewords(self) -> np.ndarray:
        """All ``2**k`` codewords as a (2**k, length) uint8 array."""
        k = self.dimension
        msgs = ((np.arange(1 << k)[:, None] >> np.arange(k)) & 1).astype(np.uint8)
        return (msgs.astype(np.int64) @ self.generator.astype(np.int64) % 2).astype(np.uint8)

    def weights(self) -> dict[int, int]:
        w = self.codewords().sum(axis=1)
        vals, counts = np.unique(w, return_counts=True)
        return {int(a): int(b) for a, b in zip(vals, counts)}

    def dual(self) -> "BinaryCode":
        return BinaryCode(self.length, gf2_nullspace(self.generator))

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.uint8) & 1
        return gf2_rank(np.vstack([self.generator, word])) == self.dimension


@lru_cache(maxsize=None)
def golay23() -> BinaryCode:
    """The perfect [23, 12, 7] binary Golay code (cyclic, quadratic residues)."""
    g = np.zeros((12, 23), dtype=np.uint8)
    for s in range(12):
        g[s, s : s + 12] = _GOLAY_GENERATOR
    return BinaryCode(23, g)


@lru_cache(maxsize=None)
def golay24() -> BinaryCode:
    """Extended [24, 12, 8] Golay code: ``golay23`` plus an overall parity bit."""
    g = golay23().generator
    parity = g.sum(axis=1, keepdims=True) % 2
    return BinaryCode(24, np.hstack([g, parity]).astype(np.uint8))


@lru_cache(maxsize=None)
def dual_golay23() -> BinaryCode:
    """The [23, 11, 8] dual of the perfect Golay code."""
    return golay23().dual()


@lru_cache(maxsize=None)
def reed_muller1(m: int) -> BinaryCode:
    """First-order Reed-Muller code RM(1, m) of length ``2**m``."""
    pts = np.array(list(product((0, 1), repeat=m)), dtype=np.uint8)
    rows = [np.ones(1 << m, dtype=np.uint8)] + [pts[:, j] for j in range(m)]
    return BinaryCode(1 << m, np.array(rows, dtype=np.uint8))
