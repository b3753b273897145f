import json
import os

import pytest

import ropelab

DATA = os.environ.get("ROPELAB_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def test_double_line_invariants():
    c = ropelab.rope_from_B(3, [["u"], ["-t"]])
    assert (c.genus, c.degree, c.alpha, c.beta) == (-1, 2, [1], [1])
    assert [c.hilbert_function(d) for d in range(4)] == [1, 4, 6, 8]
    assert c.h0_structure(0) == c.hilbert_function(0) + c.rao_function(0)


def test_normal_sheaf_char2_gap():
    c0 = ropelab.rope_from_B(3, [["u^3"], ["-t^3"]])
    c2 = ropelab.rope_from_B(3, [["u^3"], ["t^3"]], char=2)
    assert ropelab.h0_normal(c0)["h0"] == 11
    assert ropelab.h0_normal(c2)["h0"] == 12
    assert ropelab.is_obstructed(c2) is True
    assert ropelab.is_obstructed(c0) is False
    assert ropelab.double_line_formula(3, -3, 2) == 12


def test_random_rope_is_reproducible():
    a = ropelab.random_rope(4, [1, 1], char=5, seed=7)
    b = ropelab.random_rope(4, [1, 1], char=5, seed=7)
    assert a.B == b.B
    assert json.loads(a.to_json())["alpha"] == [1, 1]


def test_resolutions():
    c = ropelab.random_rope(4, [1, 2], seed=3)
    if c.nondegenerate:
        res = ropelab.rope_resolution(c)
        assert res["complex"] and res["exact"] and res["minimal"]
    i2 = ropelab.i2_resolution(4, minimal=True)
    assert i2["exact"] and i2["minimal"]


def test_families():
    assert ropelab.component_dim(3, 2, -2) == 9
    assert ropelab.minimal_types(5, 2, -5) == ([2, 3], [2, 3])
    cl = ropelab.classify(5, 3, -5, 0)
    assert cl["generically_smooth"] is None
    assert ropelab.classify(5, 3, -6, 0)["component_dim"] == 36
    assert ropelab.rho_min_dominates(4, 1, -4, -5, 5)
    assert ropelab.gin_ideal(ropelab.rope_from_B(3, [["u^2"], ["-t^2"]])) == ["x0^2", "x0*x1", "x1^2", "x0*t^2"]
    r = ropelab.staircase_rope(2, 0, 1, 2, repair=True)
    assert r.nondegenerate and r.alpha == [2]


def test_errors_raise():
    with pytest.raises(ropelab.RopelabError):
        ropelab.rope_from_B(3, [["t*u"], ["-t^2"]])
    with pytest.raises(ropelab.RopelabError):
        ropelab.run_suite("nope")


def test_data_files_load():
    c = ropelab.load_rope(os.path.join(DATA, "dl_g-3_char2.json"))
    assert c.characteristic == 2 and c.genus == -3
