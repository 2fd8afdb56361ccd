"""Smoke tests for the Python bindings; the C++ suites carry the real load."""

import json
import math

import pytest

import setcodes


def test_enumerate_ball_example():
    ball = setcodes.enumerate_ball("AC", q=4, eps=1, type="S")
    assert len(ball) == 7
    assert "AC" in ball and "GC" in ball
    assert setcodes.enumerate_ball("AC", q=4, eps=1, type="D") == ["A", "AC", "C"]


def test_construction_roundtrip():
    code = setcodes.make_construction("c1", M=8, L=10, delta=4)
    info = code.sample_info(seed=3)
    assert len(info) == code.info_bits
    words = code.encode(info)
    assert len(words) == 8 and len(set(words)) == 8
    assert code.decode(words) == info
    # within budget: drop two sequences (s + 2t = 2 <= delta)
    assert code.decode(words[2:]) == info


def test_channel_and_verify():
    code = setcodes.make_construction("c6", M=2, L=7, a=0)
    words = code.encode(code.sample_info(seed=1))
    received = setcodes.sample_channel(words, q=2, s=0, t=2, eps=1,
                                       type="ID", seed=9)
    assert code.decode(received) == code.decode(words)

    verdict = setcodes.is_correcting_code(
        [["000", "011"], ["000", "101"]], q=2, s=1, t=0,
        eps=setcodes.UNBOUNDED_EPS, type="L")
    assert not verdict["correcting"]
    assert verdict["witness"] is not None


def test_bounds_and_table():
    assert math.isclose(setcodes.gv_arbitrary(3, 4, 0, 1), 0.637429920615,
                        rel_tol=1e-9)
    assert math.isclose(setcodes.sp_arbitrary(3, 4, 0, 1), 3.84388079808,
                        rel_tol=1e-9)
    report = json.loads(setcodes.bounds_json(M=3, L=4, s=0, t=1))
    assert report["schema"] == "setcodes.bounds.v1"
    assert report["params"]["eps"] is None
    assert setcodes.table2_text().count("\n") == 10


def test_simulate_deterministic():
    kwargs = dict(M=3, L=8, a=0, s=0, t=1, eps=1, type="ID",
                  trials=50, seed=4)
    one = setcodes.simulate_json("c5", **kwargs)
    two = setcodes.simulate_json("c5", **kwargs)
    assert one == two
    assert json.loads(one)["success_rate"] == 1.0


def test_infeasible_parameters_raise():
    with pytest.raises(ValueError):
        setcodes.make_construction("c3", M=16, L=12, c=0.3, delta=0)
