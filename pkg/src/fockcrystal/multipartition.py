"""Multipartitions, multicharges, nodes, contents and residues.

Partitions are plain tuples of positive integers in weakly decreasing order
(no trailing zeros); parts beyond the height read as 0.  A multicharge is a
tuple of integers.  ``e`` is either an integer >= 2 or :data:`INFINITY`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

INFINITY = math.inf

Partition = tuple[int, ...]
Charge = tuple[int, ...]


class FockError(ValueError):
    """Domain error: malformed input or violated precondition."""


def check_e(e) -> int | float:
    if e == INFINITY:
        return INFINITY
    if isinstance(e, bool) or not isinstance(e, int):
        raise FockError(f"e must be an integer >= 2 or INFINITY, got {e!r}")
    if e < 2:
        raise FockError(f"e must be >= 2, got {e}")
    return e


def is_finite(e) -> bool:
    return e != INFINITY


def residue(content: int, e) -> int:
    """Reduce a content modulo ``e`` (identity when e is infinite)."""
    return content if e == INFINITY else content % e


def make_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise FockError(f"partition parts must be non-negative: {parts}")
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise FockError(f"partition parts must weakly decrease: {parts}")
    return parts


def conjugate(parts: Sequence[int]) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > k) for k in range(parts[0]))


class Node(NamedTuple):
    """A node (a, b, c): row a >= 1, column b >= 1, component c."""

    row: int
    col: int
    comp: int


@dataclass(frozen=True)
class Multipartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.components) < 1:
            raise FockError("a multipartition needs at least one component")
        object.__setattr__(
            self, "components", tuple(make_partition(p) for p in self.components)
        )

    @classmethod
    def empty(cls, l: int) -> "Multipartition":
        return cls(((),) * l)

    @classmethod
    def parse(cls, text: str) -> "Multipartition":
        return parse_multipartition(text)

    @property
    def l(self) -> int:
        return len(self.components)

    @property
    def rank(self) -> int:
        return sum(sum(p) for p in self.components)

    def height(self, c: int) -> int:
        return len(self.components[c])

    def part(self, c: int, i: int) -> int:
        """lambda^c_i with 1-based ``i``; 0 beyond the height."""
        p = self.components[c]
        return p[i - 1] if i <= len(p) else 0

    def is_empty(self) -> bool:
        return all(not p for p in self.components)

    def contains(self, node: Node) -> bool:
        return 1 <= node.col <= self.part(node.comp, node.row)

    def add(self, node: Node) -> "Multipartition":
        comps = list(self.components)
        p = list(comps[node.comp])
        if node.row == len(p) + 1 and node.col == 1:
            p.append(1)
        elif node.row <= len(p) and node.col == p[node.row - 1] + 1:
            p[node.row - 1] += 1
        else:
            raise FockError(f"{node} is not at the end of a row of {self}")
        comps[node.comp] = tuple(p)
        return Multipartition(tuple(comps))

    def remove(self, node: Node) -> "Multipartition":
        comps = list(self.components)
        p = list(comps[node.comp])
        if not (node.row <= len(p) and node.col == p[node.row - 1]):
            raise FockError(f"{node} is not the last box of a row of {self}")
        p[node.row - 1] -= 1
        comps[node.comp] = tuple(p)
        return Multipartition(tuple(comps))

    def sort_key(self) -> tuple:
        return (self.rank, str(self))

    def __str__(self) -> str:
        return format_multipartition(self)


def parse_multipartition(text: str) -> Multipartition:
    """Parse ``"3|2.2.2|2.1"``; ``-`` (or nothing) denotes an empty component."""
    comps = []
    for chunk in text.strip().split("|"):
        chunk = chunk.strip()
        if chunk in ("", "-", "∅"):
            comps.append(())
            continue
        try:
            comps.append(tuple(int(x) for x in chunk.split(".")))
        except ValueError:
            raise FockError(f"cannot parse partition {chunk!r} in {text!r}") from None
    return Multipartition(tuple(comps))


def format_partition(parts: Partition) -> str:
    return ".".join(map(str, parts)) if parts else "-"


def format_multipartition(lam: Multipartition) -> str:
    return "|".join(format_partition(p) for p in lam.components)


def parse_charge(text: str) -> Charge:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise FockError(f"cannot parse charge {text!r}") from None


def format_charge(s: Sequence[int]) -> str:
    return ",".join(map(str, s))


def stats(lam: Multipartition) -> tuple[int, tuple[int, ...]]:
    """Total rank and the height of each component."""
    return lam.rank, tuple(len(p) for p in lam.components)


def content(node: Node, s: Sequence[int]) -> int:
    return node.col - node.row + s[node.comp]


def content_residue(node: Node, s: Sequence[int], e) -> tuple[int, int]:
    if not 0 <= node.comp < len(s):
        raise FockError(f"component {node.comp} out of range for charge {tuple(s)}")
    cont = content(node, s)
    return cont, residue(cont, e)


def addable_nodes(lam: Multipartition) -> list[Node]:
    out = []
    for c, p in enumerate(lam.components):
        for a in range(1, len(p) + 2):
            b = (p[a - 1] if a <= len(p) else 0) + 1
            if a == 1 or p[a - 2] >= b:
                out.append(Node(a, b, c))
    return out


def removable_nodes(lam: Multipartition) -> list[Node]:
    out = []
    for c, p in enumerate(lam.components):
        for a in range(1, len(p) + 1):
            nxt = p[a] if a < len(p) else 0
            if p[a - 1] > nxt:
                out.append(Node(a, p[a - 1], c))
    return out


def boundary_nodes(lam: Multipartition) -> tuple[frozenset[Node], frozenset[Node]]:
    """(addable, removable) nodes of the Young diagram of ``lam``."""
    return frozenset(addable_nodes(lam)), frozenset(removable_nodes(lam))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for k in range(n + 1):
        for rest in _compositions(n - k, parts - 1):
            yield (k,) + rest


def multipartitions(n: int, l: int) -> Iterator[Multipartition]:
    """All ``l``-partitions of total rank ``n``."""
    for sizes in _compositions(n, l):
        yield from _product_partitions(sizes)


def _product_partitions(sizes: tuple[int, ...]) -> Iterator[Multipartition]:
    def rec(k, acc):
        if k == len(sizes):
            yield Multipartition(tuple(acc))
            return
        for p in partitions(sizes[k]):
            yield from rec(k + 1, acc + [p])

    yield from rec(0, [])


def multipartitions_upto(max_rank: int, l: int) -> Iterator[Multipartition]:
    for n in range(max_rank + 1):
        yield from multipartitions(n, l)
