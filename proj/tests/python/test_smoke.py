import pytest

import scrollsec


def test_spec_roundtrip():
    spec = scrollsec.ScrollSpec.parse("S(3,1)+cone(0)")
    assert spec.a == [1, 3]
    assert spec.h == 0
    assert spec.ambient_dim == 6
    assert repr(spec) == "S(1,3)+cone(0)"


def test_bad_literal_raises():
    with pytest.raises(scrollsec.ScrollsecError):
        scrollsec.ScrollSpec.parse("S(")


def test_classify_twisted_cubic():
    r = scrollsec.classify("S(3)", [1, 0, 0, 1], q=7)
    assert r["exit_code"] == 0
    assert r["label"] == "TwoPoints"
    assert r["depth"] == 2
    assert r["acm"] is True


def test_classify_point_on_variety():
    r = scrollsec.classify("S(3)", [1, 0, 0, 0], q=7)
    assert r["exit_code"] == 4
    assert r["error"] == "POnVariety"


def test_signature_binding():
    sig = scrollsec.classify_signature("S(1,2)", [0, 0, 1, 0, -1], q=7)
    assert sig.label == scrollsec.StratumLabel.Conic
    assert (sig.s, sig.rank) == (2, 3)


def test_sample_is_deterministic():
    a = scrollsec.sample("S(1,1,2)", n=50, seed=4)
    b = scrollsec.sample("S(1,1,2)", n=50, seed=4)
    assert a == b
    assert sum(a["census"].values()) == 50


def test_oracle_check_clean():
    r = scrollsec.oracle_check("S(1,2)", q=5, n=5)
    assert r["exit_code"] == 0
    assert r["diff"] == []


def test_realizable_labels():
    labels = scrollsec.ScrollSpec([1, 2]).realizable_labels()
    assert set(labels) == {scrollsec.StratumLabel.TwoLines, scrollsec.StratumLabel.Conic}
