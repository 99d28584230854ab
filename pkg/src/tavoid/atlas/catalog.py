"""Named codes and the ``codefile/v1`` JSON format."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import numpy as np

from ..exactnum import format_rational, to_rational
from .barnes_wall import bw16_minimal
from .binary import dual_golay23
from .codes import DerivedCode, GramCode, PointCode, derive, sphere_embed_binary
from .leech import leech_minimal, leech_norm6_representative
from .srg import builtin_graph, params_from_adjacency, read_adjacency, srg_embedding

__all__ = ["CODE_IDS", "construct", "leech_base_point", "write_codefile", "read_codefile", "codefile_dict"]

CODE_IDS = (
    "leech-min",
    "bw16",
    "dual-golay",
    "c4600",
    "c47104",
    "c93150",
    "c552",
    "c11178",
    "c48600",
    "c2816",
    "c2025",
)


@lru_cache(maxsize=None)
def leech_base_point() -> np.ndarray:
    """Minimal vector used as the pole of the derived codes.

    It sits at squared cosine 3/8 from the norm-48 representative so that
    the same pair also yields the 2025-point code.
    """
    leech = leech_minimal()
    w = leech_norm6_representative().astype(np.int64)
    hits = np.nonzero(leech.points.astype(np.int64) @ w == 24)[0]
    return leech.points[hits[0]].copy()


@lru_cache(maxsize=None)
def construct(code_id: str):
    """Build a code by id; ``srg:<file-or-builtin>:<first|second>`` for graphs."""
    if code_id.startswith("srg:"):
        try:
            _, src, which = code_id.rsplit(":", 2)
        except ValueError:
            raise ValueError("srg code ids look like srg:<file>:<first|second>") from None
        adj = builtin_graph(src) if src in ("petersen", "schlafli") else read_adjacency(src)
        return srg_embedding(params_from_adjacency(adj), adj, which, name=code_id)
    if code_id == "leech-min":
        return leech_minimal()
    if code_id == "bw16":
        return bw16_minimal()
    if code_id == "dual-golay":
        c = sphere_embed_binary(dual_golay23())
        return PointCode(c.dim, c.scale, c.points, name="dual-golay")
    leech = leech_minimal()
    x = leech_base_point()
    w = leech_norm6_representative()
    from_pole = {"c4600": Fraction(1, 2), "c47104": Fraction(1, 4), "c93150": Fraction(0)}
    if code_id in from_pole:
        return derive(leech, x, from_pole[code_id], name=code_id)
    from_hole = {"c552": Fraction(3, 8), "c11178": Fraction(1, 6), "c48600": Fraction(1, 24)}
    if code_id in from_hole:
        return derive(leech, w, alpha_sq=from_hole[code_id], sign=1, name=code_id)
    if code_id == "c2816":
        c4600 = construct("c4600")
        return derive(c4600, c4600.points[0], 0, name=code_id)
    if code_id == "c2025":
        return derive(construct("c4600"), w, alpha_sq=Fraction(1, 45), sign=1, name=code_id)
    raise KeyError(f"unknown code id {code_id!r}; known: {', '.join(CODE_IDS)}, srg:<file>:<which>")


def codefile_dict(code) -> dict:
    if isinstance(code, PointCode):
        return {
            "format": "codefile/v1",
            "kind": "lattice-points",
            "name": code.name,
            "dim": code.dim,
            "scale": code.scale,
            "points": code.points.tolist(),
        }
    if isinstance(code, DerivedCode):
        out = {
            "format": "codefile/v1",
            "kind": "derived",
            "name": code.name,
            "dim": code.root_dim,
            "scale": code.scale,
            "points": code.points.tolist(),
            "base": list(code.bases[-1]),
            "base_scale": int(np.dot(code.bases[-1], code.bases[-1])),
            "alpha_sq": format_rational(code.alpha_sq),
            "alpha_sign": code.alpha_sign,
            "bases": [list(b) for b in code.bases],
            "dots": list(code.dots),
        }
        if code.alpha is not None:
            out["alpha"] = format_rational(code.alpha)
        return out
    if isinstance(code, GramCode):
        return {
            "format": "codefile/v1",
            "kind": "gram-profile",
            "name": code.name,
            "dim": code.dim,
            "scale": 1,
            "points": [],
            "adjacency": ["".join(map(str, row)) for row in code.adjacency.tolist()],
            "adjacent": format_rational(code.adjacent),
            "nonadjacent": format_rational(code.nonadjacent),
        }
    raise TypeError(f"cannot serialize {type(code).__name__}")


def write_codefile(code, path) -> None:
    Path(path).write_text(json.dumps(codefile_dict(code)))


def read_codefile(path):
    data = json.loads(Path(path).read_text())
    kind = data.get("kind")
    name = data.get("name", Path(path).stem)
    if kind == "lattice-points":
        return PointCode(int(data["dim"]), int(data["scale"]), np.array(data["points"]), name=name)
    if kind == "derived":
        pts = np.array(data["points"])
        if "bases" in data:
            bases = tuple(tuple(int(v) for v in b) for b in data["bases"])
            dots = tuple(int(d) for d in data["dots"])
        else:
            # single-step file: recover the dot product from the first member
            base = tuple(int(v) for v in data["base"])
            bases = (base,)
            dots = (int(pts[0] @ np.array(base)),)
        if "alpha_sq" in data:
            alpha_sq, sign = to_rational(data["alpha_sq"]), int(data.get("alpha_sign", 1))
        else:
            a = to_rational(data["alpha"])
            alpha_sq, sign = a * a, (1 if a >= 0 else -1)
        return DerivedCode(int(data["dim"]), int(data["scale"]), pts, bases, dots, alpha_sq, sign, name=name)
    if kind == "gram-profile":
        adj = np.array([[int(c) for c in row] for row in data["adjacency"]], dtype=np.uint8)
        return GramCode(int(data["dim"]), adj, to_rational(data["adjacent"]), to_rational(data["nonadjacent"]), name=name)
    raise ValueError(f"unknown codefile kind {kind!r}")
