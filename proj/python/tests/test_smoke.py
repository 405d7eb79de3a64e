import json

import pytest

import ckq

SPEC = {"n": 3, "sigma": [2, 1, 3], "j": ["nil", "nil"]}


def test_describe_round_trip():
    d = ckq.describe(SPEC)
    assert d["J"] == "j2"
    assert d["J_contracted"] == "ι2"
    assert ckq.describe(d) == d


def test_verify_formal():
    r = ckq.verify({"n": 4, "sigma": [1, 3, 4, 2], "j": ["formal"] * 3})
    assert r["result"] == "PASS"
    assert any(c["check"] == "Yang-Baxter" for c in r["checks"])


def test_contract_galilei():
    r = ckq.contract(SPEC)
    assert r["name"] == "G_v(2)"
    assert r["result"] == "PASS"
    assert r["verdicts"]["unresolved"] == 0


def test_classify_counts():
    assert ckq.classify(3)["classes"] == 4
    assert ckq.classify(4)["classes"] == 8
    assert ckq.classify(4, shadow=True)["classes"] == 5
    assert ckq.classify(5, nilpotent=[1, 2, 3, 4])["classes"] == 5


def test_bad_spec_raises():
    with pytest.raises(ValueError):
        ckq.describe({"n": 3, "sigma": [1, 1, 3], "j": ["unit", "unit"]})
    with pytest.raises(ValueError):
        ckq.contract({"n": 3, "sigma": [1, 2, 3], "j": ["formal", "formal"]})


def test_json_is_deterministic():
    assert ckq.classify_json(4) == ckq.classify_json(4)
    assert json.loads(ckq.contract_json(SPEC)) == ckq.contract(SPEC)
