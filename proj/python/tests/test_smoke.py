import os
from pathlib import Path

import pytest

import acta

DATA = Path(os.environ.get("ACTA_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def ef0():
    return acta.Act(acta.semilattice_1oef(), [[0, 2, 0, 2], [1, 2, 2, 1], [2, 2, 2, 2]],
                    ["e", "f", "0"])


def test_monoid_basics():
    S = acta.semilattice_1oef()
    assert len(S) == 4
    assert S.identity == 0 and S.zero == 1
    assert S.names == ["1", "0", "e", "f"]
    assert S.product(2, 3) == 1
    assert S.is_commutative()


def test_invalid_tables_raise():
    with pytest.raises(acta.ActaError, match="NotAssociative"):
        acta.Monoid([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        acta.Act(acta.semilattice_1oef(), [[0, 0]])


def test_example_classification():
    A = ef0()
    c = acta.classification_report(A)
    assert c["faithful"] is True
    assert c["cofaithful_n"] == 2
    assert c["cofaithful_names"] == ["e", "f"]
    assert c["subgenerator"] is False
    assert c["generator"] is False
    assert acta.right_annihilator(A, [0, 1]) == [0, 1, 2, 3]


def test_files_match_constructed_act():
    A = acta.load_act(str(DATA / "act_ef0.json"))
    assert A == ef0()
    assert acta.act_json(A)["names"] == ["e", "f", "0"]
    with pytest.raises(acta.ActaError, match="Io"):
        acta.load_act(str(DATA / "missing.json"))


def test_congruences_and_cotrace():
    A = ef0()
    lattice = acta.all_congruences(A)
    assert len(lattice) == 4
    assert lattice[0] == [0, 0, 0] and lattice[-1] == [0, 1, 2]
    S = acta.regular_act(acta.semilattice_1oef())
    assert acta.is_cogenerated([A], S)
    assert acta.cotrace(S, [A]) == [0, 1, 2, 3]
    assert acta.count_homs(S, A) == 3


def test_structure():
    r = acta.structure_report(ef0())
    assert r["socle"]["names"] == ["e", "f", "0"]
    assert r["radical"]["names"] == ["0"]


def test_enumeration_and_claims():
    assert [len(acta.enumerate_monoids(n)) for n in (1, 2, 3)] == [1, 3, 10]
    assert "chain" in acta.claim_ids()
    report = acta.run_claims(2, 3, ["chain", "birkhoff"])
    assert [c["claim"] for c in report["claims"]] == ["chain", "birkhoff"]
    for c in report["claims"]:
        assert c["violations"] == []
        assert c["checked"] == c["confirmed"] + c["skipped"]
    with pytest.raises(acta.ActaError, match="UnknownClaim"):
        acta.run_claims(1, 1, ["nope"])
