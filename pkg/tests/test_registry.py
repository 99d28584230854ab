import pytest

from tavoid.exactnum import Poly
from tavoid.registry import ENTRIES, ProfileCache, entry_ids, get_entry, main_identity, reproduce, reproduce_all

EXPECTED_ERRATA = {
    "thm5.7",
    "thm7.2/case1/P7",
    "thm7.2/case2/P7",
    "thm7.2/case1",
    "thm7.2/case2",
    "thm7.2/case3",
    "thm7.4/case1",
    "thm7.4/case2",
    "thm7.4/case3",
    "thm7.7/T=(-1/3,7/23)",
    "thm7.8/T=(-1,1/3)",
}


@pytest.fixture(scope="module")
def rows():
    return {r["id"]: r for r in reproduce_all()}


def test_every_entry_passes_or_is_a_flagged_erratum(rows):
    assert [i for i, r in rows.items() if r["status"] == "fail"] == []
    assert {i for i, r in rows.items() if r["status"] == "erratum"} == EXPECTED_ERRATA


def test_errata_are_pre_flagged(rows):
    for i in EXPECTED_ERRATA:
        entry = get_entry(i)
        assert entry.errata
        assert all(e["field"] in entry.errata for e in rows[i]["errata"])


def test_row_format(rows):
    for r in rows.values():
        assert {"id", "status", "computed", "printed"} <= set(r)
        assert r["status"] in ("pass", "fail", "erratum")


def test_card_examples(rows):
    r = rows["thm5.2"]
    assert r["computed"]["f(1)"] == "45/32" and r["computed"]["f0"] == "1/66240"
    assert r["computed"]["bound"] == "93150" and r["computed"]["attainment"]["ok"]
    r = rows["thm6.7/case1"]
    assert (r["computed"]["f(1)"], r["computed"]["f0"], r["computed"]["bound"]) == ("45/32", "1/3072", "4320")
    assert rows["thm6.6/case2"]["status"] == "pass"


def test_known_misprint_reported_with_both_values(rows):
    (e,) = rows["thm5.7"]["errata"]
    assert e["computed"] == "255/11264"
    assert e["printed"] == "15/662"  # 255/11254 in lowest terms


def test_energy_rows_match_code_energy(rows):
    for i, r in rows.items():
        if r["kind"] == "energy" and r["status"] == "pass":
            for k in ("riesz:1", "riesz:2"):
                assert r["computed"][k]["bound"] == r["computed"][k]["code_energy"]


def test_ids_unique_and_lookup():
    ids = entry_ids()
    assert len(ids) == len(set(ids)) == len(ENTRIES)
    with pytest.raises(KeyError):
        get_entry("nope")


def test_main_identity_holds_for_a_non_certificate():
    cache = ProfileCache()
    p = cache.get("c2025")
    lhs, rhs = main_identity(Poly([3, -1, 0, 2, 0, 0, 0, 5]), p)
    assert lhs == rhs


def test_single_reproduce_uses_own_cache():
    assert reproduce("three-distance/golay")["status"] == "pass"
