"""Shifted symbols of multipartitions, e-periods and the peeling procedure.

Row ``c`` of the symbol of ``(lam, s)`` is the strictly decreasing,
semi-infinite sequence ``B_i = lam^c_i - i + s_c + 1`` (i = 1, 2, ...).
Rows are never materialized beyond what a computation needs.  Display and
reading convention: row ``l-1`` is the top row, row 0 the bottom one, and
"below" means a smaller row index.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .multipartition import (
    INFINITY,
    Charge,
    FockError,
    Multipartition,
    Node,
    check_e,
    format_charge,
)


class InconsistencyError(RuntimeError):
    """Two routes to the same quantity disagree (an implementation bug)."""


def _check_pair(lam: Multipartition, s: Sequence[int]) -> Charge:
    s = tuple(int(x) for x in s)
    if len(s) != lam.l:
        raise FockError(f"charge {s} has length {len(s)}, multipartition has {lam.l}")
    return s


def _finite_e(e) -> int:
    e = check_e(e)
    if e == INFINITY:
        raise FockError("this operation needs a finite e")
    return e


def symbol_entry(lam: Multipartition, s: Sequence[int], c: int, i: int) -> int:
    if not 0 <= c < lam.l or i < 1:
        raise FockError(f"symbol index (c={c}, i={i}) out of range")
    return lam.part(c, i) - i + s[c] + 1


def row_prefix(lam: Multipartition, s: Sequence[int], c: int, length: int) -> list[int]:
    p, sc = lam.components[c], s[c]
    return [(p[i - 1] if i <= len(p) else 0) - i + sc + 1 for i in range(1, length + 1)]


def row_index(lam: Multipartition, s: Sequence[int], c: int, value: int) -> int | None:
    """Index ``i`` with ``B^c_i == value``, or None when the row misses it."""
    p, sc = lam.components[c], s[c]
    h = len(p)
    if value <= sc - h:
        return sc + 1 - value
    for i in range(1, h + 1):
        v = p[i - 1] - i + sc + 1
        if v == value:
            return i
        if v < value:
            return None
    return None


def row_contains(lam: Multipartition, s: Sequence[int], c: int, value: int) -> bool:
    return row_index(lam, s, c, value) is not None


def max_entry(lam: Multipartition, s: Sequence[int]) -> int:
    return max(lam.part(c, 1) + s[c] for c in range(lam.l))


def first_gap(lam: Multipartition, s: Sequence[int], c: int) -> int:
    """Smallest integer missing from row ``c``; the row holds every integer below it."""
    p, sc = lam.components[c], s[c]
    v = sc - len(p) + 1
    while row_contains(lam, s, c, v):
        v += 1
    return v


@dataclass(frozen=True)
class Symbol:
    lam: Multipartition
    charge: Charge

    def __post_init__(self):
        object.__setattr__(self, "charge", _check_pair(self.lam, self.charge))

    def entry(self, c: int, i: int) -> int:
        return symbol_entry(self.lam, self.charge, c, i)

    def rows(self, extra: int = 1) -> list[list[int]]:
        """Row prefixes long enough to show ``extra`` tail entries per row."""
        return [
            row_prefix(self.lam, self.charge, c, self.lam.height(c) + extra)
            for c in range(self.lam.l)
        ]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Symbol":
        """Recover (lam, s) from row prefixes whose last entry lies in the tail."""
        comps, charge = [], []
        for row in rows:
            if not row:
                raise FockError("empty row prefix")
            sc = row[-1] + len(row) - 1
            parts = [b + i - sc - 1 for i, b in enumerate(row, start=1)]
            comps.append(tuple(parts))
            charge.append(sc)
        return cls(Multipartition(tuple(comps)), tuple(charge))

    def display(self, extra: int = 2) -> str:
        """Rows (top row first) right-justified on a common column grid."""
        rows = self.rows(extra)
        # entry i of row c sits in column s_c - i + 1
        cols = {}
        for c, row in enumerate(rows):
            for i, b in enumerate(row, start=1):
                cols[(c, self.charge[c] - i + 1)] = b
        lo = min(x for (_, x) in cols)
        hi = max(x for (_, x) in cols)
        width = max(len(str(b)) for b in cols.values())
        # pad every row down to the common leftmost column
        for c in range(len(rows)):
            for x in range(lo, self.charge[c] + 1):
                cols.setdefault((c, x), self.entry(c, self.charge[c] - x + 1))
        width = max(len(str(b)) for b in cols.values())
        lines = []
        for c in reversed(range(len(rows))):
            cells = [
                str(cols[(c, x)]).rjust(width) if (c, x) in cols else " " * width
                for x in range(lo, hi + 1)
            ]
            lines.append("... " + " ".join(cells).rstrip())
        return "\n".join(lines)


def truncated_symbol(lam: Multipartition, s: Sequence[int], e) -> list[list[int]]:
    """Row c holds B^c_1 .. B^c_{h_c + e}; index 0 of the result is row 0."""
    e = _finite_e(e)
    s = _check_pair(lam, s)
    return [row_prefix(lam, s, c, lam.height(c) + e) for c in range(lam.l)]


class Letter(NamedTuple):
    value: int
    comp: int
    index: int


def reading_word(lam: Multipartition, s: Sequence[int], e) -> list[Letter]:
    """Truncated rows read from the top row down, each from its largest entry."""
    trunc = truncated_symbol(lam, s, e)
    return [
        Letter(b, c, i)
        for c in reversed(range(lam.l))
        for i, b in enumerate(trunc[c], start=1)
    ]


@dataclass(frozen=True)
class Period:
    nodes: tuple[Node, ...]
    form: tuple[int, ...]

    @property
    def top(self) -> int:
        return self.form[0]

    def to_json(self) -> dict:
        return {"form": list(self.form), "nodes": [list(n) for n in self.nodes]}


def _period_from_word(lam, s, e) -> Period | None:
    word = reading_word(lam, s, e)
    k = max(letter.value for letter in word)
    last = {}
    for pos, letter in enumerate(word):
        last[letter.value] = pos
    positions = []
    for a in range(e):
        pos = last.get(k - a)
        if pos is None or (positions and pos <= positions[-1]):
            return None
        positions.append(pos)
    letters = [word[p] for p in positions]
    nodes = tuple(Node(x.index, lam.part(x.comp, x.index), x.comp) for x in letters)
    return Period(nodes, tuple(k - a for a in range(e)))


def _period_by_definition(lam, s, e) -> Period | None:
    # row membership is decided on the untruncated rows
    k = max_entry(lam, s)
    nodes = []
    for t in range(e):
        value = k - t
        rows = [c for c in range(lam.l) if row_contains(lam, s, c, value)]
        if not rows:
            return None
        c = min(rows)
        if nodes and c > nodes[-1].comp:
            return None
        i = row_index(lam, s, c, value)
        nodes.append(Node(i, lam.part(c, i), c))
    return Period(tuple(nodes), tuple(k - t for t in range(e)))


def find_period(lam: Multipartition, s: Sequence[int], e) -> Period | None:
    """The e-period of the symbol of (lam, s), or None if it is not e-periodic."""
    e = _finite_e(e)
    s = _check_pair(lam, s)
    from_word = _period_from_word(lam, s, e)
    if from_word != _period_by_definition(lam, s, e):
        raise InconsistencyError(
            f"period extraction disagrees for {lam} with charge {s}, e={e}"
        )
    return from_word


def delete_entries(
    lam: Multipartition, s: Sequence[int], cells: Sequence[tuple[int, int]]
) -> tuple[Multipartition, Charge]:
    """Delete the entries at (c, i) positions and re-read the rows as a symbol."""
    doomed: dict[int, set[int]] = {}
    for c, i in cells:
        doomed.setdefault(c, set()).add(i)
    comps, charge = list(lam.components), list(s)
    for c, idx in doomed.items():
        length = max(lam.height(c), max(idx)) + 1
        kept = [
            b for i, b in enumerate(row_prefix(lam, s, c, length), start=1) if i not in idx
        ]
        charge[c] = s[c] - len(idx)
        comps[c] = tuple(
            b + i - charge[c] - 1 for i, b in enumerate(kept, start=1)
        )
    return Multipartition(tuple(comps)), tuple(charge)


def insert_entries(
    lam: Multipartition, s: Sequence[int], entries: Sequence[tuple[int, int]]
) -> tuple[Multipartition, Charge]:
    """Inverse of :func:`delete_entries`: add (c, value) entries to the rows."""
    extra: dict[int, list[int]] = {}
    for c, v in entries:
        extra.setdefault(c, []).append(v)
    comps, charge = list(lam.components), list(s)
    for c, vals in extra.items():
        row = []
        i = 1
        while True:
            b = symbol_entry(lam, s, c, i)
            row.append(b)
            if i > lam.height(c) and b < min(vals):
                break
            i += 1
        if any(v in row for v in vals):
            raise FockError(f"row {c} already contains one of {vals}")
        merged = sorted(row + vals, reverse=True)
        charge[c] = s[c] + len(vals)
        comps[c] = tuple(b + i - charge[c] - 1 for i, b in enumerate(merged, start=1))
    return Multipartition(tuple(comps)), tuple(charge)


def period_cells(lam, s, period: Period) -> list[tuple[int, int]]:
    return [(n.comp, n.row) for n in period.nodes]


def remove_period(lam: Multipartition, s: Sequence[int], e) -> tuple[Multipartition, Charge]:
    """(lam^-, s^-); the identity on symbols that are not e-periodic."""
    s = _check_pair(lam, s)
    period = find_period(lam, s, e)
    if period is None:
        return lam, s
    return delete_entries(lam, s, period_cells(lam, s, period))


def in_T(s: Sequence[int], e) -> bool:
    """Membership in T_{l,e}: weakly increasing with spread at most e - 1."""
    if any(s[c] > s[c + 1] for c in range(len(s) - 1)):
        return False
    return e == INFINITY or s[-1] - s[0] <= e - 1


@dataclass(frozen=True)
class PeelStep:
    period: Period
    lambda_before: Multipartition
    charge_before: Charge
    lambda_after: Multipartition
    charge_after: Charge

    def to_json(self) -> dict:
        out = self.period.to_json()
        out["charge_before"] = list(self.charge_before)
        out["charge_after"] = list(self.charge_after)
        return out


@dataclass(frozen=True)
class PeelTrace:
    initial_lambda: Multipartition
    initial_charge: Charge
    final_lambda: Multipartition
    final_charge: Charge
    e: int
    steps: tuple[PeelStep, ...] = field(default=())

    @property
    def periods(self) -> tuple[Period, ...]:
        return tuple(step.period for step in self.steps)

    @property
    def totally_periodic(self) -> bool:
        return self.final_lambda.is_empty() and in_T(self.final_charge, self.e)

    def replay(self) -> tuple[Multipartition, Charge]:
        """Re-insert the removed periods, last one first."""
        lam, s = self.final_lambda, self.final_charge
        for step in reversed(self.steps):
            lam, s = insert_entries(
                lam, s, [(n.comp, v) for n, v in zip(step.period.nodes, step.period.form)]
            )
        return lam, s

    def to_json(self) -> dict:
        return {
            "lambda": str(self.initial_lambda),
            "charge": list(self.initial_charge),
            "e": self.e,
            "periods": [step.to_json() for step in self.steps],
            "final_lambda": str(self.final_lambda),
            "final_charge": list(self.final_charge),
            "totally_periodic": self.totally_periodic,
        }

    def describe(self) -> str:
        lines = [f"peel {self.initial_lambda} s=({format_charge(self.initial_charge)}) e={self.e}"]
        for n, step in enumerate(self.steps, start=1):
            lines.append(
                f"  {n}: form {step.period.form} -> {step.lambda_after} "
                f"s=({format_charge(step.charge_after)})"
            )
        lines.append(
            f"final {self.final_lambda} s=({format_charge(self.final_charge)}) "
            f"totally_periodic={self.totally_periodic}"
        )
        return "\n".join(lines)


MAX_PEEL_STEPS = 100_000


def peel(lam: Multipartition, s: Sequence[int], e) -> PeelTrace:
    e = _finite_e(e)
    s0 = s = _check_pair(lam, s)
    lam0 = lam
    steps = []
    while not (lam.is_empty() and in_T(s, e)):
        period = find_period(lam, s, e)
        if period is None:
            break
        new_lam, new_s = delete_entries(lam, s, period_cells(lam, s, period))
        steps.append(PeelStep(period, lam, s, new_lam, new_s))
        lam, s = new_lam, new_s
        if len(steps) > MAX_PEEL_STEPS:
            raise InconsistencyError(f"peeling {lam0} with charge {s0} does not terminate")
    return PeelTrace(lam0, s0, lam, s, e, tuple(steps))


def is_totally_periodic(lam: Multipartition, s: Sequence[int], e) -> bool:
    return peel(lam, s, e).totally_periodic


def reduce_charge(s: Sequence[int], e) -> Charge:
    """Charge in T_{l,e} reached by stripping e-periods off the empty symbol."""
    s = tuple(s)
    trace = peel(Multipartition.empty(len(s)), s, e)
    assert trace.final_lambda.is_empty()
    return trace.final_charge


def lattice_reading(lam: Multipartition, s: Sequence[int]) -> tuple[int, list[int]]:
    """(m, word): m is the largest integer with every smaller one in all rows;
    the word lists entries >= m, top row first, each row from its largest entry."""
    s = _check_pair(lam, s)
    m = min(first_gap(lam, s, c) for c in range(lam.l))
    word = []
    for c in reversed(range(lam.l)):
        for b in row_prefix(lam, s, c, max(lam.height(c), s[c] - m + 1)):
            if b >= m:
                word.append(b)
    return m, word


def is_reverse_lattice(word: Sequence[int], floor: int) -> bool:
    """Every letter v > floor can be chained down to ``floor`` through later letters."""
    counts: dict[int, int] = {}
    for v in reversed(word):
        counts[v] = counts.get(v, 0) + 1
        if v > floor and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def is_totally_periodic_inf(lam: Multipartition, s: Sequence[int]) -> bool:
    m, word = lattice_reading(lam, s)
    return is_reverse_lattice(word, m)


def is_semistandard(lam: Multipartition, s: Sequence[int]) -> bool:
    """Weakly increasing charge and columns weakly increasing from the top row down.

    Rows are aligned on their tails, so entry i of row c shares a column
    with entry i + s_{c+1} - s_c of row c + 1.
    """
    s = _check_pair(lam, s)
    if any(s[c] > s[c + 1] for c in range(lam.l - 1)):
        return False
    for c in range(lam.l - 1):
        shift = s[c + 1] - s[c]
        for i in range(1, max(lam.height(c), lam.height(c + 1)) + 2):
            if symbol_entry(lam, s, c + 1, i + shift) > symbol_entry(lam, s, c, i):
                return False
    return True
