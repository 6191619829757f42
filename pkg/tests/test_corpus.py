import json
from fractions import Fraction

import pytest

from bihomdi import linalg as la
from bihomdi.core import check_axioms
from bihomdi.corpus import (
    PROFILES,
    corpus_build,
    corpus_ids,
    corpus_list,
    corpus_verify,
    get_entry,
    parse_tables,
    profile_values,
    report_json,
    report_text,
)
from bihomdi.errors import MissingParameter, ParseError, UnknownEntry
from bihomdi.field import GF

# H^2 with values in the trivial one-dimensional module at the "ones" profile,
# computed by the stack-and-rank oracle in tests/oracles.py
FROZEN_H2 = {
    "dim1/trivial": (2, 0, 2),
    **{f"dim2/Alg{i}": (6, 1, 5) for i in range(1, 5)},
    **{f"dim3/Alg{i}": (14, 1, 13) for i in range(1, 6)},
    "dim4/Alg1": (16, 2, 14),
    "dim4/Alg2": (24, 1, 23),
    **{f"dim4/Alg{i}": (22, 1, 21) for i in (3, 4, 5, 6, 7, 8, 12, 15, 16)},
    **{f"dim4/Alg{i}": (16, 2, 14) for i in (9, 10, 11)},
    **{f"dim4/Alg{i}": (20, 1, 19) for i in (13, 14)},
}


def test_twenty_six_entries():
    ids = corpus_ids()
    assert len(ids) == 26
    assert [sum(i.startswith(f"dim{d}/") for i in ids) for d in (1, 2, 3, 4)] == [1, 4, 5, 16]
    assert len(corpus_list()) == 26


def test_alg3_transcription():
    e = get_entry("dim2/Alg3")
    assert e.params == ("a", "b", "c", "d")
    D = corpus_build("dim2/Alg3", {"a": 2, "b": 3, "c": 5, "d": 7})
    assert D.left[0, 1, 0] == 2 and D.right[1, 1, 0] == 7
    assert D.alpha[0, 1] == 1 and D.alpha[0, 0] == 0


def test_missing_and_unknown():
    with pytest.raises(MissingParameter):
        corpus_build("dim2/Alg3", {"a": 1})
    with pytest.raises(UnknownEntry):
        corpus_build("dim5/Alg1")
    with pytest.raises(ValueError):
        profile_values(get_entry("dim2/Alg3"), "threes")


def test_profiles():
    e = get_entry("dim2/Alg3")
    assert profile_values(e, "mixed") == {"a": 1, "b": 2, "c": 3, "d": 4}
    assert set(profile_values(e, "twos").values()) == {Fraction(2)}


def test_dim2_alpha_equals_beta():
    for eid in corpus_ids():
        if eid.startswith("dim2/"):
            D = corpus_build(eid)
            assert la.equal(D.alpha, D.beta)


def test_flags_recorded():
    assert any("truncated" in f for f in get_entry("dim3/Alg3").flags)
    assert any("twice" in f for f in get_entry("dim4/Alg5").flags)


def test_table_parser_rejects_duplicates():
    with pytest.raises(ParseError):
        parse_tables("entry x 2\n  L e1 e2 = e1\n  L e1 e2 = e2\n")
    with pytest.raises(ParseError):
        parse_tables("entry x 2\n  L e1 e2 = e1 e2\n")


def test_table_parser_terms():
    e = parse_tables("entry x 4\n  L e1 e2 = -2a e4 + f e1\n")["x"]
    (_, _, terms), = e.left
    assert [(t.coeff, t.param, t.basis) for t in terms] == [(-2, "a", 3), (1, "f", 0)]


@pytest.mark.parametrize("eid", sorted(FROZEN_H2))
def test_frozen_cohomology(eid):
    from bihomdi.cohomology import cohomology_dims

    assert cohomology_dims(corpus_build(eid)).as_tuple() == FROZEN_H2[eid]


def test_low_dimensional_entries_pass_every_profile():
    for profile in PROFILES:
        for eid in corpus_ids():
            if not eid.startswith("dim4"):
                assert check_axioms(corpus_build(eid, profile=profile)).passed, (eid, profile)


def test_dim4_entries_have_noncommuting_maps():
    for eid in corpus_ids():
        if eid.startswith("dim4"):
            assert not check_axioms(corpus_build(eid))["commute"].passed, eid


@pytest.fixture(scope="module")
def report():
    return corpus_verify("ones")


def test_report_summary(report):
    assert report["schema_version"] == 1
    assert report["summary"] == {"entries": 26, "pass": 10, "table_discrepancy": 16}


def test_report_rendering(report):
    text = report_text(report)
    assert text.count("\n") >= 27
    assert "dim4/Alg1" in text and "fails commute" in text
    doc = json.loads(report_json(report))
    assert doc["entries"][3]["id"] == "dim2/Alg3"
    assert doc["entries"][3]["der00_dim"] == 0


def test_report_over_gf3():
    rep = corpus_verify("ones", GF(3))
    assert rep["field"] == "gf3"
    assert rep["summary"]["entries"] == 26
