"""Kashiwara crystal of the level-l Fock space, for finite e and for e = INFINITY.

For e = INFINITY a "residue" is simply a content.  Weights are δ-free:
``alpha_i = -Lambda_{i-1} + 2 Lambda_i - Lambda_{i+1}`` (indices mod e when
e is finite).
"""
from __future__ import annotations

import json
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .multipartition import (
    INFINITY,
    Charge,
    FockError,
    Multipartition,
    Node,
    addable_nodes,
    check_e,
    content,
    format_charge,
    multipartitions,
    removable_nodes,
    residue,
)
from .symbol import (
    InconsistencyError,
    _check_pair,
    _finite_e,
    first_gap,
    max_entry,
    row_index,
    symbol_entry,
)
from .weights import WeightAff, WeightInf

A, R = "A", "R"


def i_word(lam: Multipartition, s: Sequence[int], e, i: int) -> list[tuple[Node, str]]:
    """Addable (A) and removable (R) i-nodes, smallest content first, ties by larger c."""
    e = check_e(e)
    s = _check_pair(lam, s)
    letters = [(n, A) for n in addable_nodes(lam)] + [(n, R) for n in removable_nodes(lam)]
    word = [(n, t) for n, t in letters if residue(content(n, s), e) == residue(i, e)]
    word.sort(key=lambda nt: (content(nt[0], s), -nt[0].comp))
    return word


@dataclass(frozen=True)
class ReducedWord:
    """What survives RA-cancellation: ``p`` A's followed by ``q`` R's."""

    addable: tuple[Node, ...]
    removable: tuple[Node, ...]

    @property
    def p(self) -> int:
        return len(self.addable)

    @property
    def q(self) -> int:
        return len(self.removable)

    @property
    def good_addable(self) -> Node | None:
        return self.addable[-1] if self.addable else None

    @property
    def good_removable(self) -> Node | None:
        return self.removable[0] if self.removable else None


def _cancel(word: Sequence[tuple[Node, str]]) -> ReducedWord:
    surviving_a: list[Node] = []
    pending_r: list[Node] = []
    for node, tag in word:
        if tag == R:
            pending_r.append(node)
        elif pending_r:
            pending_r.pop()
        else:
            surviving_a.append(node)
    return ReducedWord(tuple(surviving_a), tuple(pending_r))


def reduced_i_word(lam: Multipartition, s: Sequence[int], e, i: int) -> ReducedWord:
    return _cancel(i_word(lam, s, e, i))


def symbol_i_word(lam: Multipartition, s: Sequence[int], e, i: int) -> list[tuple[Node, str]]:
    """The i-word read off the symbol from entries j / j+1 with j ≡ i.

    Letter j at index k of row c stands for the node (k, lam^c_k + 1, c) and
    letter j+1 for (k, lam^c_k, c); in-row pairs (j+1, j) cancel each other.
    """
    e = check_e(e)
    s = _check_pair(lam, s)
    if e == INFINITY:
        js = [i]
    else:
        floor = min(first_gap(lam, s, c) for c in range(lam.l)) - 1
        j_low = floor - (floor - i) % e
        js = list(range(j_low, max_entry(lam, s) + 1, e))
    word = []
    for j in js:
        for c in reversed(range(lam.l)):
            k = row_index(lam, s, c, j + 1)
            if k is not None:
                word.append((Node(k, lam.part(c, k), c), R))
            k = row_index(lam, s, c, j)
            if k is not None:
                word.append((Node(k, lam.part(c, k) + 1, c), A))
    return word


def reduced_word_from_symbol(lam: Multipartition, s: Sequence[int], e, i: int) -> ReducedWord:
    return _cancel(symbol_i_word(lam, s, e, i))


def eps_phi(lam: Multipartition, s: Sequence[int], e, i: int) -> tuple[int, int]:
    rw = reduced_i_word(lam, s, e, i)
    return rw.q, rw.p


def f_tilde(lam: Multipartition, s: Sequence[int], e, i: int) -> Multipartition | None:
    node = reduced_i_word(lam, s, e, i).good_addable
    return None if node is None else lam.add(node)


def e_tilde(lam: Multipartition, s: Sequence[int], e, i: int) -> Multipartition | None:
    node = reduced_i_word(lam, s, e, i).good_removable
    return None if node is None else lam.remove(node)


def node_contents(lam: Multipartition, s: Sequence[int]) -> Counter:
    """Number of nodes of each content."""
    s = _check_pair(lam, s)
    counts: Counter = Counter()
    for c, p in enumerate(lam.components):
        for a, length in enumerate(p, start=1):
            for b in range(1, length + 1):
                counts[b - a + s[c]] += 1
    return counts


def live_residues(lam: Multipartition, s: Sequence[int], e) -> list[int]:
    """Residues worth scanning: all of Z/eZ, or the boundary contents when e is infinite."""
    e = check_e(e)
    if e != INFINITY:
        return list(range(e))
    s = _check_pair(lam, s)
    conts = {content(n, s) for n in addable_nodes(lam) + removable_nodes(lam)}
    return sorted(conts)


def weight_aff(lam: Multipartition, s: Sequence[int], e) -> WeightAff:
    """Λ_{s mod e} minus the simple roots of the nodes; checked against Σ (φ_i - ε_i) Λ_i."""
    e = _finite_e(e)
    s = _check_pair(lam, s)
    by_nodes = WeightAff.from_charge(s, e)
    for j, n in node_contents(lam, s).items():
        by_nodes = by_nodes - WeightAff.simple_root(j, e) * n
    vec = []
    for i in range(e):
        eps, phi = eps_phi(lam, s, e, i)
        vec.append(phi - eps)
    by_strings = WeightAff(e, vec)
    if by_nodes != by_strings:
        raise InconsistencyError(
            f"weight of {lam}, s={s}: nodes give {by_nodes}, strings give {by_strings}"
        )
    return by_nodes


def _alpha_inf(j: int) -> WeightInf:
    return WeightInf({j - 1: -1, j: 2, j + 1: -1})


def weight_inf(lam: Multipartition, s: Sequence[int]) -> WeightInf:
    """Λ_s minus the simple roots of the nodes; checked against the symbol-entry sum."""
    s = _check_pair(lam, s)
    by_nodes = WeightInf.from_charge(s)
    for j, n in node_contents(lam, s).items():
        by_nodes = by_nodes - _alpha_inf(j) * n
    by_entries = WeightInf.from_charge(s)
    for c in range(lam.l):
        for k in range(1, lam.height(c) + 1):
            moved = symbol_entry(lam, s, c, k)
            empty = s[c] - k + 1
            by_entries = by_entries + WeightInf.eps(moved) - WeightInf.eps(empty)
    if by_nodes != by_entries:
        raise InconsistencyError(
            f"infinite weight of {lam}, s={s}: nodes give {by_nodes}, entries give {by_entries}"
        )
    return by_nodes


def is_highest_weight(lam: Multipartition, s: Sequence[int], e) -> bool:
    e = check_e(e)
    s = _check_pair(lam, s)
    if e == INFINITY:
        candidates = sorted({content(n, s) for n in removable_nodes(lam)})
    else:
        candidates = range(e)
    return all(eps_phi(lam, s, e, i)[0] == 0 for i in candidates)


def canonical_charge(s: Sequence[int], e) -> Charge:
    e = _finite_e(e)
    return tuple(sorted(x % e for x in s))


def equivalent(s: Sequence[int], t: Sequence[int], e) -> bool:
    return len(s) == len(t) and canonical_charge(s, e) == canonical_charge(t, e)


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    residue: int
    content: int


@dataclass
class Vertex:
    id: int
    lam: Multipartition
    hw: bool
    wt_aff: WeightAff | None
    wt_inf: WeightInf

    @property
    def rank(self) -> int:
        return self.lam.rank


@dataclass
class CrystalGraph:
    charge: Charge
    e: int | float
    max_rank: int
    vertices: list[Vertex] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)

    def __post_init__(self):
        self._index = {v.lam: v.id for v in self.vertices}

    def vertex_id(self, lam: Multipartition) -> int:
        try:
            return self._index[lam]
        except KeyError:
            raise FockError(f"{lam} is not a vertex of this graph") from None

    def highest_weight_vertices(self) -> list[Vertex]:
        return [v for v in self.vertices if v.hw]

    def component(self, lam: Multipartition) -> "CrystalGraph":
        """Connected component (ignoring arrow direction) containing ``lam``."""
        start = self.vertex_id(lam)
        adj: dict[int, list[int]] = {v.id: [] for v in self.vertices}
        for ed in self.edges:
            adj[ed.src].append(ed.dst)
            adj[ed.dst].append(ed.src)
        seen, queue = {start}, deque([start])
        while queue:
            for nb in adj[queue.popleft()]:
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        old = [v for v in self.vertices if v.id in seen]
        renum = {v.id: k for k, v in enumerate(old)}
        verts = [Vertex(renum[v.id], v.lam, v.hw, v.wt_aff, v.wt_inf) for v in old]
        edges = [
            Edge(renum[ed.src], renum[ed.dst], ed.residue, ed.content)
            for ed in self.edges
            if ed.src in seen
        ]
        return CrystalGraph(self.charge, self.e, self.max_rank, verts, edges)

    def edge_set(self) -> set[tuple[Multipartition, Multipartition, int]]:
        """Edges as (source, target, content) triples."""
        lams = [v.lam for v in self.vertices]
        return {(lams[ed.src], lams[ed.dst], ed.content) for ed in self.edges}

    def to_json_obj(self) -> dict:
        e = "inf" if self.e == INFINITY else self.e
        return {
            "charge": list(self.charge),
            "e": e,
            "max_rank": self.max_rank,
            "vertices": [
                {
                    "id": v.id,
                    "lambda": str(v.lam),
                    "charge": list(self.charge),
                    "rank": v.rank,
                    "hw": v.hw,
                    "wt_aff": None if v.wt_aff is None else list(v.wt_aff.coeffs),
                    "wt_inf": v.wt_inf.to_json(),
                }
                for v in self.vertices
            ],
            "edges": [
                {"src": ed.src, "dst": ed.dst, "residue": ed.residue, "content": ed.content}
                for ed in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def to_dot(self) -> str:
        lines = [f'digraph crystal {{', f'  label="s=({format_charge(self.charge)})";']
        for v in self.vertices:
            style = ", peripheries=2" if v.hw else ""
            lines.append(f'  v{v.id} [label="{v.lam}"{style}];')
        for ed in self.edges:
            lines.append(f'  v{ed.src} -> v{ed.dst} [label="{ed.residue} ({ed.content})"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


DEFAULT_VERTEX_CAP = 250_000


def _vertex_data(args):
    lam, s, e = args
    hw = is_highest_weight(lam, s, e)
    wa = None if e == INFINITY else weight_aff(lam, s, e)
    wi = weight_inf(lam, s)
    out = []
    for i in live_residues(lam, s, e) if e == INFINITY else range(e):
        node = reduced_i_word(lam, s, e, i).good_addable
        if node is not None:
            out.append((lam.add(node), i, content(node, s)))
    return hw, wa, wi, out


def generate_crystal(
    s: Sequence[int],
    e,
    max_rank: int,
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    normalize_charge: bool = False,
    jobs: int = 1,
) -> CrystalGraph:
    """All l-partitions of rank <= max_rank with their f-arrows.

    ``normalize_charge`` shifts s by a multiple of e so that s_0 lies in
    [0, e); the resulting graph is the same up to content labels.
    """
    e = check_e(e)
    s = tuple(int(x) for x in s)
    if max_rank < 0:
        raise FockError("max_rank must be >= 0")
    if normalize_charge and e != INFINITY:
        shift = (s[0] // e) * e
        s = tuple(x - shift for x in s)
    l = len(s)
    lams: list[Multipartition] = []
    for n in range(max_rank + 1):
        layer = sorted(multipartitions(n, l), key=str)
        lams.extend(layer)
        if len(lams) > vertex_cap:
            raise FockError(f"crystal exceeds the vertex cap of {vertex_cap}")
    work = [(lam, s, e) for lam in lams]
    if jobs > 1 and len(work) > 200:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            data = list(pool.map(_vertex_data, work, chunksize=64))
    else:
        data = [_vertex_data(w) for w in work]
    index = {lam: k for k, lam in enumerate(lams)}
    vertices, edges = [], []
    for k, (lam, (hw, wa, wi, out)) in enumerate(zip(lams, data)):
        vertices.append(Vertex(k, lam, hw, wa, wi))
        for dst, i, j in out:
            if dst.rank <= max_rank:
                edges.append(Edge(k, index[dst], i, j))
    edges.sort(key=lambda ed: (ed.src, ed.residue, ed.dst))
    return CrystalGraph(s, e, max_rank, vertices, edges)
