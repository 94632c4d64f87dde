import json
import math
import pathlib

import pytest

import mvq

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def gauss_binomial(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def test_weyl_data():
    assert mvq.weyl_group_order("A", 3) == 24
    assert mvq.weyl_group_order("D", 4) == 192
    assert len(mvq.chamber_weights("A", 2)) == 6
    report = mvq.check_admissibility("A", 3)
    assert report["elements"] == 24
    assert report["failures"] == 0


def test_module_loading():
    m = mvq.Module.from_file(str(DATA / "a2_interval_12.json"))
    assert m.id == "A2 [1,2]"
    assert m.dims == [1, 1]
    assert m.is_kq
    text = json.dumps({"family": "A", "rank": 1, "dims": [2]})
    assert mvq.Module.from_json(text).dims == [2]
    with pytest.raises(mvq.ValidationError):
        mvq.Module.from_file(str(DATA / "a2_identity_both.json"))
    with pytest.raises(mvq.InputError):
        mvq.Module.from_file(str(DATA / "bad_schema.json"))


def test_gamma_table_and_polytope():
    m = mvq.Module.from_intervals("A", 2, [(1, 2, 1)])
    table = dict((tuple(g), d) for g, d in m.dgamma_table())
    assert table[(-1, 1)] == 1
    assert table[(0, -1)] == 0
    assert m.d_gamma([-1, 1]) == 1
    poly = (m + mvq.Module.from_intervals("A", 2, [(2, 2, 1)])).polytope()
    assert poly["pseudo_weyl"]
    assert len(poly["vertices"]) == 6


def test_grassmannian_of_a_vector_space():
    m = mvq.Module.from_intervals("A", 1, [(1, 1, 5)])
    for e in range(6):
        r = mvq.ring(m, [e])
        assert r["ring_dim"] == math.comb(5, e)
        assert mvq.euler_cc(m, [e]) == math.comb(5, e)
        assert mvq.count_points(m, [e], 3) == gauss_binomial(5, e, 3)
        assert sum(mvq.poincare(m, [e])) == math.comb(5, e)


def test_verify_and_scan():
    m = mvq.Module.from_file(str(DATA / "a2_12_plus_22.json"))
    report = mvq.verify(m, [0, 1])
    assert report["ring_dim"] == 2
    assert report["chi"] == 2
    assert report["ring_hilbert"] == [1, 1]
    assert report["dim_match"] and report["series_match"]
    assert report["mode"] == "assert"
    reports = mvq.scan(m)
    assert all(r["dim_match"] for r in reports)
    assert "a2_1*b1_1" in mvq.ring(m, [0, 1])["presentation"]
    with pytest.raises(mvq.InputError):
        mvq.verify(m, [3, 0])


def test_factor_check():
    k2 = mvq.Module.from_intervals("A", 1, [(1, 1, 2)])
    k3 = mvq.Module.from_intervals("A", 1, [(1, 1, 3)])
    for e in range(6):
        fc = mvq.factor_check(k2, k3, [e])
        assert fc["holds"]
        assert fc["lhs"] == math.comb(5, e)


def test_explore_mode_for_non_kq():
    m = mvq.Module.from_file(str(DATA / "a3_nilpotent_pi.json"))
    assert not m.is_kq
    assert mvq.verify(m, [0, 1, 0])["mode"] == "explore"
    assert mvq.verify(m, [0, 1, 0], mode="assert")["mode"] == "assert"
