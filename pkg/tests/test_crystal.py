from __future__ import annotations

import json

import pytest
from hypothesis import given

from fockcrystal.crystal import (
    canonical_charge,
    e_tilde,
    eps_phi,
    equivalent,
    f_tilde,
    generate_crystal,
    i_word,
    is_highest_weight,
    live_residues,
    reduced_i_word,
    reduced_word_from_symbol,
    weight_aff,
    weight_inf,
)
from fockcrystal.multipartition import (
    INFINITY,
    FockError,
    Multipartition,
    addable_nodes,
    content,
    multipartitions,
    multipartitions_upto,
    parse_multipartition,
    partitions,
    removable_nodes,
)
from fockcrystal.symbol import is_totally_periodic, is_totally_periodic_inf
from fockcrystal.weights import WeightAff, WeightInf, project_weight

from conftest import charged_st, e_st


def oracle_signature(lam: Multipartition, s, e, i):
    """Good addable / removable node by rewriting the A/R string until no 'RA' is left."""
    nodes = [(n, "A") for n in addable_nodes(lam)] + [(n, "R") for n in removable_nodes(lam)]
    same = [
        (n, t) for n, t in nodes
        if (content(n, s) == i if e == INFINITY else (content(n, s) - i) % e == 0)
    ]
    same.sort(key=lambda nt: (content(nt[0], s), -nt[0].comp))
    letters = list(same)
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            if letters[k][1] == "R" and letters[k + 1][1] == "A":
                del letters[k:k + 2]
                changed = True
                break
    adds = [n for n, t in letters if t == "A"]
    rems = [n for n, t in letters if t == "R"]
    return (adds[-1] if adds else None), (rems[0] if rems else None), len(rems), len(adds)


def hw_count_level_one(n: int, e: int) -> int:
    # highest weight vertices of the level one Fock space: p(n / e), zero unless e | n
    return sum(1 for _ in partitions(n // e)) if n % e == 0 else 0


@pytest.mark.parametrize("e", [2, 3, INFINITY])
@pytest.mark.parametrize("s", [(0,), (0, 0), (0, 2), (1, -1), (0, 0, 1)])
def test_operators_match_oracle(s, e):
    for lam in multipartitions_upto(5, len(s)):
        for i in live_residues(lam, s, e):
            good_a, good_r, eps, phi = oracle_signature(lam, s, e, i)
            assert f_tilde(lam, s, e, i) == (None if good_a is None else lam.add(good_a))
            assert e_tilde(lam, s, e, i) == (None if good_r is None else lam.remove(good_r))
            assert eps_phi(lam, s, e, i) == (eps, phi)


@pytest.mark.parametrize("e", [2, 3, 4])
def test_level_one_highest_weights(e):
    for n in range(9):
        got = sum(is_highest_weight(lam, (0,), e) for lam in multipartitions(n, 1))
        assert got == hw_count_level_one(n, e), n


def test_level_one_infinite_only_empty_is_highest():
    for n in range(1, 7):
        assert not any(is_highest_weight(lam, (0,), INFINITY) for lam in multipartitions(n, 1))


def test_i_word_order():
    lam = parse_multipartition("1|1")
    word = i_word(lam, (0, 0), INFINITY, 0)
    # same content: the larger component comes first
    assert [(n.comp, t) for n, t in word] == [(1, "R"), (0, "R")]


def test_small_dot_graph():
    g = generate_crystal((0,), 2, 3)
    dot = g.to_dot()
    assert len(g.vertices) == 7
    assert dot.count("[label=") - dot.count("->") == 7
    assert [str(v.lam) for v in g.highest_weight_vertices()] == ["-", "1.1"]


def test_vertex_counts_and_ordering():
    g = generate_crystal((0, 1), 3, 4)
    assert len(g.vertices) == 1 + 2 + 5 + 10 + 20
    keys = [(v.rank, str(v.lam)) for v in g.vertices]
    assert keys == sorted(keys)
    assert [v.id for v in g.vertices] == list(range(len(g.vertices)))


def test_vertex_cap():
    with pytest.raises(FockError):
        generate_crystal((0, 0), 2, 6, vertex_cap=50)
    with pytest.raises(FockError):
        generate_crystal((0,), 1, 3)


def test_parallel_matches_serial():
    a = generate_crystal((0, 0, 1), 2, 5)
    b = generate_crystal((0, 0, 1), 2, 5, jobs=2)
    assert a.to_json() == b.to_json()


def test_json_schema_roundtrip():
    g = generate_crystal((0, 1), 2, 3)
    data = json.loads(g.to_json())
    assert set(data) == {"charge", "e", "max_rank", "vertices", "edges"}
    for v in data["vertices"]:
        lam = parse_multipartition(v["lambda"])
        assert WeightInf.from_json(v["wt_inf"]) == weight_inf(lam, (0, 1))
        assert tuple(v["wt_aff"]) == weight_aff(lam, (0, 1), 2).coeffs
    assert json.loads(generate_crystal((0, 1), INFINITY, 2).to_json())["e"] == "inf"


def test_component_of_empty_infinite():
    g = generate_crystal((0, 1), INFINITY, 4)
    comp = g.component(Multipartition.empty(2))
    assert all(v.lam.rank <= 4 for v in comp.vertices)
    assert [str(v.lam) for v in comp.highest_weight_vertices()] == ["-|-"]
    with pytest.raises(FockError):
        g.vertex_id(parse_multipartition("9|-"))


def test_normalize_charge_keeps_graph_shape():
    a = generate_crystal((0, 1), 3, 3)
    b = generate_crystal((3, 4), 3, 3, normalize_charge=True)
    assert [(ed.src, ed.dst, ed.residue) for ed in a.edges] == [(ed.src, ed.dst, ed.residue) for ed in b.edges]


def test_canonical_charge():
    assert canonical_charge((5, -1, 2), 3) == (2, 2, 2)
    assert equivalent((0, 4), (1, 3), 3)
    assert not equivalent((0, 0), (0, 1), 3)


@given(charged_st(), e_st)
def test_word_equality(pair, e):
    lam, s = pair
    for i in range(e):
        assert reduced_i_word(lam, s, e, i) == reduced_word_from_symbol(lam, s, e, i)


@given(charged_st(), e_st)
def test_hw_iff_totally_periodic(pair, e):
    lam, s = pair
    assert is_highest_weight(lam, s, e) == is_totally_periodic(lam, s, e)


@given(charged_st())
def test_hw_iff_reverse_lattice(pair):
    lam, s = pair
    assert is_highest_weight(lam, s, INFINITY) == is_totally_periodic_inf(lam, s)


@given(charged_st(), e_st)
def test_operators_inverse_and_weight_shift(pair, e):
    lam, s = pair
    w = weight_aff(lam, s, e)
    for i in range(e):
        mu = f_tilde(lam, s, e, i)
        if mu is not None:
            assert e_tilde(mu, s, e, i) == lam
            assert weight_aff(mu, s, e) == w - WeightAff.simple_root(i, e)
            eps, phi = eps_phi(lam, s, e, i)
            assert eps_phi(mu, s, e, i) == (eps + 1, phi - 1)
        nu = e_tilde(lam, s, e, i)
        if nu is not None:
            assert f_tilde(nu, s, e, i) == lam


@given(charged_st(), e_st)
def test_projection_of_infinite_weight(pair, e):
    lam, s = pair
    assert project_weight(weight_inf(lam, s), e) == weight_aff(lam, s, e)


@given(charged_st())
def test_finite_arrows_are_infinite_arrows(pair):
    lam, s = pair
    for e in (2, 3):
        for i in range(e):
            mu = f_tilde(lam, s, e, i)
            if mu is None:
                continue
            (node,) = [n for n in removable_nodes(mu) if not lam.contains(n)]
            assert f_tilde(lam, s, INFINITY, content(node, s)) == mu
