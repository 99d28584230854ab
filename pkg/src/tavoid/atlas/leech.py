"""Leech lattice shells in integer coordinates (minimal norm 32).

Coordinates are the usual Golay-code ones multiplied by sqrt(8): a vector
``x`` of ``Z^24`` lies in the lattice iff all ``x_i`` share a parity ``m``,
the positions with ``x_i = 2 (mod 4)`` (``m = 0``) or ``x_i = 3 (mod 4)``
(``m = 1``) carry a Golay codeword, and ``sum x_i = 4m (mod 8)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .binary import golay24
from .codes import PointCode

__all__ = [
    "LEECH_SCALE",
    "golay_octads",
    "in_leech",
    "leech_members_mask",
    "leech_minimal",
    "leech_norm6_representative",
    "leech_shape_counts",
]

LEECH_SCALE = 32


@lru_cache(maxsize=None)
def _parity_check() -> np.ndarray:
    # golay24 is self-dual, so its generator doubles as a parity-check matrix
    return golay24().generator.astype(np.int64)


def _is_codeword_rows(words: np.ndarray) -> np.ndarray:
    return np.all((words.astype(np.int64) @ _parity_check().T) % 2 == 0, axis=1)


def leech_members_mask(x: np.ndarray) -> np.ndarray:
    """Vectorized lattice membership for the rows of ``x``."""
    x = np.atleast_2d(np.asarray(x, dtype=np.int64))
    m = x[:, 0] % 2
    same_parity = np.all(x % 2 == m[:, None], axis=1)
    mark = np.where(m[:, None] == 0, x % 4 == 2, x % 4 == 3).astype(np.uint8)
    golay_ok = _is_codeword_rows(mark)
    sum_ok = x.sum(axis=1) % 8 == (4 * m) % 8
    return same_parity & golay_ok & sum_ok


def in_leech(x) -> bool:
    return bool(leech_members_mask(np.asarray(x))[0])


@lru_cache(maxsize=None)
def golay_octads() -> np.ndarray:
    words = golay24().codewords()
    return words[words.sum(axis=1) == 8]


def _even_sign_patterns(k: int) -> np.ndarray:
    pats = np.array(list(product((1, -1), repeat=k)), dtype=np.int8)
    return pats[(pats == -1).sum(axis=1) % 2 == 0]


@lru_cache(maxsize=None)
def _shapes() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # shape (+-4, +-4, 0^22)
    a = []
    for i, j in combinations(range(24), 2):
        for si, sj in product((4, -4), repeat=2):
            v = np.zeros(24, dtype=np.int8)
            v[i], v[j] = si, sj
            a.append(v)
    a = np.array(a)
    # shape (+-2^8, 0^16) on octads, even number of minus signs
    octads = golay_octads()
    signs = _even_sign_patterns(8)
    b = np.zeros((octads.shape[0] * signs.shape[0], 24), dtype=np.int8)
    for k, o in enumerate(octads):
        support = np.nonzero(o)[0]
        b[k * signs.shape[0] : (k + 1) * signs.shape[0], support] = 2 * signs
    # shape (-+3, +-1^23): (-3, 1^23) with signs flipped on a Golay codeword
    words = golay24().codewords().astype(np.int8)
    flips = 1 - 2 * words
    c = np.empty((24 * flips.shape[0], 24), dtype=np.int8)
    for i in range(24):
        base = np.ones(24, dtype=np.int8)
        base[i] = -3
        c[i * flips.shape[0] : (i + 1) * flips.shape[0]] = flips * base
    return a, b, c


def leech_shape_counts() -> tuple[int, int, int]:
    return tuple(s.shape[0] for s in _shapes())


@lru_cache(maxsize=None)
def leech_minimal() -> PointCode:
    """The 196560 minimal vectors, squared norm 32."""
    pts = np.vstack(_shapes())
    if not np.all(leech_members_mask(pts)):
        raise AssertionError("constructed vector outside the Leech lattice")
    return PointCode(24, LEECH_SCALE, pts, name="leech-min")


_NORM6_CANDIDATES = (
    (5,) + (1,) * 23,
    (4,) + (2,) * 7 + (-2,) + (0,) * 16,
    (3, 3, 3) + (1,) * 21,
    (2,) * 12 + (0,) * 12,
)


@lru_cache(maxsize=None)
def leech_norm6_representative() -> np.ndarray:
    """A lattice vector of squared norm 48 (a point of the second shell)."""
    for cand in _NORM6_CANDIDATES:
        v = np.array(cand, dtype=np.int64)
        if int(v @ v) == 48 and in_leech(v):
            return v.astype(np.int8)
    # wider search: (+-4, +-2^8 on an octad) placements
    for o in golay_octads():
        support = np.nonzero(o)[0]
        for i in range(24):
            if i in support:
                continue
            for signs in product((1, -1), repeat=8):
                v = np.zeros(24, dtype=np.int64)
                v[support] = 2 * np.array(signs)
                v[i] = 4
                if in_leech(v):
                    return v.astype(np.int8)
    raise RuntimeError("no norm-48 Leech vector found among candidate shapes")
