import json

import pytest

import siglat


def spec(name):
    for s in siglat.builtin_corpus():
        if s.name == name:
            return s
    raise KeyError(name)


def test_corpus_contents():
    names = {s.name for s in siglat.builtin_corpus()}
    assert {"S3", "S4", "A5", "Q8", "C12"} <= names
    assert spec("S4").order() == 24
    assert spec("A5").order() == 60


def test_s3_sigma0():
    report = siglat.analyze(spec("S3"), "sigma0")
    assert report["sigma_full"]
    assert report["sperm_orders"] == [1, 3, 6]
    assert report["lattice"]["distributive"]
    assert report["theorem_a"]["verdict"] == "consistent"
    assert report["violations"] == []


def test_q8_sigma0():
    report = siglat.analyze(spec("Q8"), "sigma0")
    assert report["sperm_count"] == 6
    assert not report["lattice"]["distributive"]
    assert not report["theorem_a"]["cond_iv_full"]["holds"]
    assert report["theorem_a"]["verdict"] == "consistent"


def test_sigma_full_flag():
    assert siglat.is_sigma_full(spec("A5"), "pi:2,3")
    assert not siglat.is_sigma_full(spec("A5"), "blocks:[3];rest=one_block")


def test_subgroup_orders():
    orders = siglat.subgroup_orders(spec("S4"))
    assert len(orders) == 30
    assert orders[0] == 1 and orders[-1] == 24


def test_parse_errors():
    with pytest.raises(ValueError):
        siglat.validate_partition("pi:4")
    with pytest.raises(ValueError):
        siglat.parse_group_json("{not json")


def test_group_json_roundtrip():
    s = siglat.parse_group_json(
        '{"name":"S3","degree":3,"generators":["(1 2)","(1 2 3)"]}'
    )
    assert s.order() == 6


def test_sweep_deterministic():
    a = siglat.sweep_json(["sigma0"], jobs=1)
    b = siglat.sweep_json(["sigma0"], jobs=4)
    assert a == b
    reports = [json.loads(r) for r in a]
    assert all(r["violations"] == [] for r in reports)
