"""Constructions of the codes: Golay, Leech shells, derived codes, Barnes-Wall, SRG embeddings."""

from .barnes_wall import bw16_minimal
from .binary import BinaryCode, dual_golay23, golay23, golay24, reed_muller1
from .catalog import CODE_IDS, construct, read_codefile, write_codefile
from .codes import DerivedCode, GramCode, PointCode, derive, sphere_embed_binary
from .leech import leech_minimal, leech_norm6_representative
from .srg import SRGParams, srg_embedding

__all__ = [
    "BinaryCode",
    "CODE_IDS",
    "DerivedCode",
    "GramCode",
    "PointCode",
    "SRGParams",
    "bw16_minimal",
    "construct",
    "derive",
    "dual_golay23",
    "golay23",
    "golay24",
    "leech_minimal",
    "leech_norm6_representative",
    "read_codefile",
    "reed_muller1",
    "sphere_embed_binary",
    "srg_embedding",
    "write_codefile",
]
