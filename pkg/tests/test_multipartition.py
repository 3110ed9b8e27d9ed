from __future__ import annotations

import pytest
from hypothesis import given

from fockcrystal.multipartition import (
    INFINITY,
    FockError,
    Multipartition,
    Node,
    addable_nodes,
    check_e,
    conjugate,
    content,
    content_residue,
    format_multipartition,
    make_partition,
    multipartitions,
    parse_charge,
    parse_multipartition,
    partitions,
    removable_nodes,
)

from conftest import multipartitions_st

# p(n) and the number of bipartitions / tripartitions, n = 0..7
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15]
BIPARTITION_COUNTS = [1, 2, 5, 10, 20, 36, 65, 110]
TRIPARTITION_COUNTS = [1, 3, 9, 22, 51, 108, 221, 429]


@pytest.mark.parametrize("n", range(8))
def test_partition_counts(n):
    assert sum(1 for _ in partitions(n)) == PARTITION_COUNTS[n]
    assert sum(1 for _ in multipartitions(n, 2)) == BIPARTITION_COUNTS[n]
    assert sum(1 for _ in multipartitions(n, 3)) == TRIPARTITION_COUNTS[n]


def test_enumeration_has_no_duplicates():
    lams = list(multipartitions(6, 3))
    assert len(lams) == len(set(lams))
    assert all(lam.rank == 6 for lam in lams)


def test_parse_and_format():
    lam = parse_multipartition("3|2.2.2|2.1")
    assert lam.components == ((3,), (2, 2, 2), (2, 1))
    assert format_multipartition(lam) == "3|2.2.2|2.1"
    assert parse_multipartition("-|2.2|-").components == ((), (2, 2), ())
    assert str(parse_multipartition("∅|1")) == "-|1"
    assert parse_charge("-1, 2,3") == (-1, 2, 3)


@pytest.mark.parametrize("bad", ["1.2", "a|1", "2.-1", "1..x"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(FockError):
        parse_multipartition(bad)


def test_parse_charge_rejects_garbage():
    with pytest.raises(FockError):
        parse_charge("1,x")


def test_check_e():
    assert check_e(2) == 2
    assert check_e(INFINITY) == INFINITY
    for bad in (1, 0, -3, 2.5, True):
        with pytest.raises(FockError):
            check_e(bad)


def test_conjugate_and_make_partition():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert make_partition([2, 1, 0, 0]) == (2, 1)
    with pytest.raises(FockError):
        make_partition([1, 2])


def test_boundary_nodes_small():
    lam = parse_multipartition("2.1|-")
    assert set(addable_nodes(lam)) == {Node(1, 3, 0), Node(2, 2, 0), Node(3, 1, 0), Node(1, 1, 1)}
    assert set(removable_nodes(lam)) == {Node(1, 2, 0), Node(2, 1, 0)}


def test_content_and_residue():
    s = (1, 0, 2)
    assert content(Node(1, 1, 0), s) == 1
    assert content_residue(Node(3, 1, 1), s, 2) == (-2, 0)
    assert content_residue(Node(3, 1, 1), s, INFINITY) == (-2, -2)
    with pytest.raises(FockError):
        content_residue(Node(1, 1, 5), s, 2)


def test_add_remove_errors():
    lam = parse_multipartition("1|-")
    with pytest.raises(FockError):
        lam.add(Node(2, 2, 0))
    with pytest.raises(FockError):
        lam.remove(Node(1, 1, 1))


@given(multipartitions_st())
def test_add_remove_roundtrip(lam: Multipartition):
    for node in addable_nodes(lam):
        mu = lam.add(node)
        assert mu.rank == lam.rank + 1
        assert node in removable_nodes(mu)
        assert mu.remove(node) == lam
    for node in removable_nodes(lam):
        assert lam.remove(node).add(node) == lam


@given(multipartitions_st())
def test_format_parse_roundtrip(lam: Multipartition):
    assert parse_multipartition(format_multipartition(lam)) == lam


@given(multipartitions_st())
def test_addable_minus_removable(lam: Multipartition):
    # each component has exactly one more addable than removable node
    assert len(addable_nodes(lam)) - len(removable_nodes(lam)) == lam.l
