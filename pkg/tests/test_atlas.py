from fractions import Fraction as F
from itertools import combinations, product

import numpy as np
import pytest

from tavoid.atlas.barnes_wall import bw16_members_mask, bw16_minimal
from tavoid.atlas.binary import BinaryCode, dual_golay23, golay24
from tavoid.atlas.catalog import CODE_IDS, construct, leech_base_point, read_codefile, write_codefile
from tavoid.atlas.codes import derive, sphere_embed_binary
from tavoid.atlas.leech import golay_octads, in_leech, leech_minimal, leech_norm6_representative, leech_shape_counts
from tavoid.atlas.srg import builtin_graph, embedding_pq, exact_psd_rank, params_from_adjacency, srg_embedding
from tavoid.designs import profile


def test_golay_codes():
    g = golay24()
    assert len(g.codewords()) == 4096
    assert g.weights() == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    gen = g.generator.astype(int)
    assert np.all((gen @ gen.T) % 2 == 0)
    d = dual_golay23()
    assert len(d.codewords()) == 2048
    assert set(d.weights()) == {0, 8, 12, 16}
    assert len(golay_octads()) == 759


def test_sphere_embedding():
    c = sphere_embed_binary(dual_golay23())
    p = profile(c)
    assert (c.size, c.dim) == (2048, 23)
    assert p.inner_products == (F(-9, 23), F(-1, 23), F(7, 23))
    pair = sphere_embed_binary(BinaryCode(2, np.array([[1, 1]], dtype=np.uint8)))
    assert profile(pair).inner_products == (-1,)


def test_leech_minimal():
    L = leech_minimal()
    assert L.size == 196560
    assert leech_shape_counts() == (1104, 97152, 98304)
    assert L.is_antipodal()
    assert all(in_leech(v) for v in L.points[::997])


def test_leech_inner_products_sampled():
    L = leech_minimal()
    pts = L.points.astype(np.int64)
    rows = pts[:: 4093]
    values = {L.unit_inner(int(v)) for v in np.unique(rows @ pts.T)}
    assert values == {F(-1), F(-1, 2), F(-1, 4), F(0), F(1, 4), F(1, 2), F(1)}


def test_norm48_vector_counts():
    w = leech_norm6_representative().astype(np.int64)
    assert int(w @ w) == 48
    assert in_leech(w)
    pts = leech_minimal().points.astype(np.int64)
    d = pts @ w
    # squared cosine (x.w)^2 / (32 * 48)
    counts = {F(int(v) ** 2, 32 * 48): int(c) for v, c in zip(*np.unique(d[d > 0], return_counts=True))}
    assert counts[F(3, 8)] == 552
    assert counts[F(1, 6)] == 11178
    assert counts[F(1, 24)] == 48600


def test_derived_counts_sum():
    L = leech_minimal()
    x = leech_base_point()
    sizes = [derive(L, x, a).size for a in (F(1, 2), F(1, 4), 0, F(-1, 4), F(-1, 2))]
    assert sizes == [4600, 47104, 93150, 47104, 4600]
    assert sum(sizes) + 2 == 196560


def test_derived_inner_products_follow_formula():
    L = leech_minimal()
    parent = {F(k, 4) for k in range(-4, 5) if k not in (-3, 3)}
    for code_id, alpha_sq in (("c4600", F(1, 4)), ("c552", F(3, 8))):
        p = profile(construct(code_id))
        allowed = {(b - alpha_sq) / (1 - alpha_sq) for b in parent}
        if code_id == "c552":
            # measured against a norm-48 vector, the parent values are unchanged
            assert set(p.inner_products) <= {F(-1), F(-1, 5), F(1, 5)}
        else:
            assert set(p.inner_products) <= allowed


def test_construction_sizes():
    expected = {
        "leech-min": 196560, "bw16": 4320, "dual-golay": 2048, "c4600": 4600, "c47104": 47104,
        "c93150": 93150, "c552": 552, "c11178": 11178, "c48600": 48600, "c2816": 2816, "c2025": 2025,
    }
    assert set(expected) == set(CODE_IDS)
    for code_id, size in expected.items():
        assert construct(code_id).size == size


def test_bw16_oracle():
    # every integer vector with entries in {-2..2} and squared norm <= 8
    found = {2: 0, 4: 0, 6: 0, 8: 0}
    for norm in found:
        for twos in range(norm // 4 + 1):
            ones = norm - 4 * twos
            for supp2 in combinations(range(16), twos):
                rest = [i for i in range(16) if i not in supp2]
                for supp1 in combinations(rest, ones):
                    base = np.zeros(16, dtype=np.int64)
                    signs = np.array(list(product((1, -1), repeat=twos + ones)), dtype=np.int64)
                    vecs = np.repeat(base[None, :], len(signs), axis=0)
                    vecs[:, list(supp2)] = 2 * signs[:, :twos]
                    vecs[:, list(supp1)] = signs[:, twos:]
                    found[norm] += int(bw16_members_mask(vecs).sum())
    assert found == {2: 0, 4: 0, 6: 0, 8: 4320}
    assert bw16_minimal().size == 4320


def test_codefile_round_trip(tmp_path):
    for code_id in ("bw16", "c2816", "srg:petersen:second"):
        code = construct(code_id)
        path = tmp_path / "code.json"
        write_codefile(code, path)
        back = read_codefile(path)
        assert back.size == code.size
        assert profile(back).pair_counts == profile(code).pair_counts


def test_petersen_embedding():
    adj = builtin_graph("petersen")
    params = params_from_adjacency(adj)
    assert (params.v, params.k, params.lam, params.mu) == (10, 3, 0, 1)
    dim, p, q = embedding_pq(params, "second")
    assert (dim, p, q) == (4, F(-2, 3), F(1, 6))
    assert dim * (1 - p) * (1 - q) / (dim * p * q + 1) == 10
    code = srg_embedding(params, adj, "second")
    psd, rank = exact_psd_rank(code.gram())
    assert psd and rank <= dim
    sums = [sum(embedding_pq(params, w)[1:]) for w in ("first", "second")]
    assert min(sums) < 0


def test_schlafli_params():
    params = params_from_adjacency(builtin_graph("schlafli"))
    assert (params.v, params.k, params.lam, params.mu) == (27, 16, 10, 8)


def test_unknown_code():
    with pytest.raises(KeyError):
        construct("c12345")
