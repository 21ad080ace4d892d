import pytest

import mgs


def test_validate_params():
    assert mgs.validate_params(1, 2, 1)["ok"]
    bad = mgs.validate_params(0, 1, 4)
    assert not bad["ok"]
    assert bad["reason"] == "puncture_one"


def test_build_and_roundtrip():
    mat = mgs.build_diagram(1, 2, 1)
    assert mat.size == 8
    assert mat.labels()[0] == "g_1"
    assert mat.labels()[-1] == "f_2"
    again = mgs.matrix_from_json(mat.to_json())
    assert again == mat


def test_delta_and_verify():
    steps = mgs.delta(1, 2, 1)
    assert len(steps) == 22
    assert steps[:5] == ["h_2", "h_1", "m_1", "h_2", "g_1"]
    report = mgs.verify_mgs(1, 2, 1)
    assert report["valid"]
    assert report["violations"] == 0


def test_seed_mutation():
    seed = mgs.frame(mgs.build_diagram(1, 2, 1))
    assert seed.color("h_2") == "green"
    once = seed.mutate("h_2")
    assert once.color("h_2") == "red"
    assert once.mutate("h_2") == seed
    assert not seed.is_final()


def test_search_small():
    mat = mgs.build_diagram(0, 2, 3)
    res = mgs.search_mgs(mat, max_depth=len(mgs.delta(0, 2, 3)))
    assert res["status"] == "found"
    assert res["sequences"]


def test_unsupported_params_raise():
    with pytest.raises(ValueError):
        mgs.build_diagram(0, 1, 4)


def test_trace_header():
    text = mgs.trace(1, 2, 1)
    lines = text.splitlines()
    assert lines[0].startswith("step |")
    assert len(lines) == 23
