"""Minimal vectors of the 16-dimensional Barnes-Wall lattice.

The lattice is ``RM(1,4) + 2 D_16``: integer vectors whose reduction mod 2
is a first-order Reed-Muller codeword and whose coordinate sum is 0 mod 4.
Minimal vectors have squared norm 8.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .binary import reed_muller1
from .codes import PointCode

__all__ = ["BW_SCALE", "bw16_members_mask", "bw16_minimal"]

BW_SCALE = 8


def bw16_members_mask(x: np.ndarray) -> np.ndarray:
    x = np.atleast_2d(np.asarray(x, dtype=np.int64))
    rm = reed_muller1(4)
    words = {w.tobytes() for w in rm.codewords()}
    residues = (x % 2).astype(np.uint8)
    in_rm = np.array([r.tobytes() in words for r in residues])
    return in_rm & (x.sum(axis=1) % 4 == 0)


@lru_cache(maxsize=None)
def bw16_minimal() -> PointCode:
    """The 4320 minimal vectors: 480 of shape (+-2^2, 0^14), 3840 of shape (+-1^8, 0^8)."""
    rows = []
    for i, j in combinations(range(16), 2):
        for si, sj in product((2, -2), repeat=2):
            v = np.zeros(16, dtype=np.int8)
            v[i], v[j] = si, sj
            rows.append(v)
    words = reed_muller1(4).codewords()
    signs = np.array(list(product((1, -1), repeat=8)), dtype=np.int8)
    signs = signs[(signs == -1).sum(axis=1) % 2 == 0]
    for w in words[words.sum(axis=1) == 8]:
        support = np.nonzero(w)[0]
        for s in signs:
            v = np.zeros(16, dtype=np.int8)
            v[support] = s
            rows.append(v)
    pts = np.array(rows)
    if not np.all(bw16_members_mask(pts)):
        raise AssertionError("constructed vector outside the Barnes-Wall lattice")
    return PointCode(16, BW_SCALE, pts, name="bw16")
