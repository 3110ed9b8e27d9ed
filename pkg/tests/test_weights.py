from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from fockcrystal.weights import WeightAff, WeightInf, project_weight

coeffs_st = st.dictionaries(st.integers(-8, 8), st.integers(-3, 3), max_size=6)


def test_str_and_zero():
    w = WeightInf({0: 1, 2: 1, 4: -1})
    assert str(w) == "L0 + L2 - L4"
    assert str(WeightInf()) == "0"
    assert WeightInf({3: 0}).is_zero()
    assert str(WeightInf({1: -2, 5: 3})) == "-2L1 + 3L5"


def test_eps_and_omega():
    assert WeightInf.eps(3) == WeightInf({3: 1, 2: -1})
    assert WeightInf.omega(5, 2) == WeightInf({5: 1, 3: -1})
    # omega_k is a telescoping sum of e consecutive eps
    for k in range(-4, 5):
        for e in (2, 3, 4):
            total = WeightInf()
            for j in range(k - e + 1, k + 1):
                total = total + WeightInf.eps(j)
            assert total == WeightInf.omega(k, e)


def test_from_charge():
    assert WeightInf.from_charge((0, 0, 1)) == WeightInf({0: 2, 1: 1})
    assert WeightAff.from_charge((0, 0, 1), 2).coeffs == (2, 1)
    assert WeightAff.from_charge((-1, 3), 4).coeffs == (0, 0, 0, 2)


def test_simple_roots_level_zero():
    for e in (2, 3, 5):
        for i in range(e):
            a = WeightAff.simple_root(i, e)
            assert a.level == 0
            assert a.coeffs[i] == 2
    assert WeightAff.simple_root(0, 2).coeffs == (2, -2)


def test_mixing_e_rejected():
    with pytest.raises(ValueError):
        WeightAff(2, (1, 0)) + WeightAff(3, (1, 0, 0))


def test_eps_coords_requires_level_zero():
    with pytest.raises(ValueError):
        WeightInf({0: 1}).eps_coords()


@pytest.mark.parametrize("k", range(-10, 11))
@pytest.mark.parametrize("e", [2, 3, 4, 5])
def test_projection_kills_omega(k, e):
    assert project_weight(WeightInf.omega(k, e), e) == WeightAff(e)


@given(coeffs_st, coeffs_st)
def test_additive(a, b):
    x, y = WeightInf(a), WeightInf(b)
    assert (x + y) - y == x
    assert x + (-x) == WeightInf()
    assert (x * 3).level == 3 * x.level


@given(coeffs_st, st.integers(2, 6))
def test_projection_linear_and_level(a, e):
    w = WeightInf(a)
    p = project_weight(w, e)
    assert p.level == w.level
    assert project_weight(w + w, e) == p + p


@given(coeffs_st)
def test_json_roundtrip(a):
    w = WeightInf(a)
    assert WeightInf.from_json(json.loads(json.dumps(w.to_json()))) == w


@given(coeffs_st)
def test_eps_coords_roundtrip(a):
    w = WeightInf(a)
    if w.level != 0:
        w = w - WeightInf.fundamental(0) * w.level
    assert WeightInf.from_eps(w.eps_coords()) == w


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4), st.integers(2, 5))
def test_charge_projection(s, e):
    assert project_weight(WeightInf.from_charge(s), e) == WeightAff.from_charge(s, e)
