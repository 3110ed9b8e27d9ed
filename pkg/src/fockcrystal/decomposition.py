"""Kostka numbers, the highest weight symbol / tableau bijection, totally periodic
skew tableaux, and the multiplicities m and M of the branching rule.

Tableaux here are *row-strict*: rows strictly increase left to right and
columns weakly increase top to bottom.  With that convention the number of
e = INFINITY highest weight vertices of weight Lambda_v in the crystal of
charge s is ``kostka(*lambda_mu_of(v, s))``.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .multipartition import Charge, FockError, Multipartition, conjugate, make_partition
from .symbol import (
    Symbol,
    _check_pair,
    _finite_e,
    first_gap,
    in_T,
    is_semistandard,
    lattice_reading,
    peel,
    row_prefix,
)
from .weights import WeightInf

Tableau = tuple[tuple[int, ...], ...]


def kostka(shape: Sequence[int], weight: Sequence[int]) -> int:
    """Row-strict, column-weak fillings of ``shape`` with weight[c] letters c+1."""
    shape = make_partition(sorted((int(x) for x in shape if x), reverse=True))
    weight = tuple(int(x) for x in weight)
    if any(w < 0 for w in weight) or sum(shape) != sum(weight):
        return 0
    return _kostka(shape, weight)


@lru_cache(maxsize=None)
def _kostka(shape: tuple[int, ...], weight: tuple[int, ...]) -> int:
    # the cells holding the largest letter form a strip with at most one cell per row
    if not weight:
        return 0 if shape else 1
    k, rest = weight[-1], weight[:-1]
    total = 0
    for inner in _remove_vertical_strips(shape, k):
        total += _kostka(inner, rest)
    return total


def _remove_vertical_strips(shape: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
    rows = len(shape)

    def rec(r: int, left: int, cur: list[int]):
        if left > rows - r:
            return
        if r == rows:
            if left == 0 and all(cur[i] >= cur[i + 1] for i in range(rows - 1)):
                yield make_partition(cur)
            return
        yield from rec(r + 1, left, cur)
        if left:
            cur[r] -= 1
            yield from rec(r + 1, left - 1, cur)
            cur[r] += 1

    yield from rec(0, k, list(shape))


def lambda_mu_of(v: Sequence[int], s: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    v, s = tuple(v), tuple(s)
    if len(v) != len(s) or not v:
        raise FockError(f"charges {v} and {s} must have the same positive length")
    if any(v[c] > v[c + 1] for c in range(len(v) - 1)):
        raise FockError(f"v={v} must be weakly increasing")
    if any(s[c] > s[c + 1] for c in range(len(s) - 1)):
        raise FockError(f"s={s} must be weakly increasing")
    if v[0] > s[0]:
        raise FockError(f"need v_0 <= s_0, got v={v}, s={s}")
    lengths = sorted((x - v[0] for x in v), reverse=True)
    shape = conjugate(make_partition(lengths))
    weight = tuple(x - v[0] for x in s)
    return shape, weight


def hw_charge_inf(lam: Multipartition, s: Sequence[int]) -> Charge:
    """v with wt = Lambda_v, for an e = INFINITY highest weight vertex."""
    from .crystal import is_highest_weight, weight_inf
    from .multipartition import INFINITY

    s = _check_pair(lam, s)
    if not is_highest_weight(lam, s, INFINITY):
        raise FockError(f"({lam}, {s}) is not an INFINITY highest weight vertex")
    w = weight_inf(lam, s)
    v = []
    for j, a in w.coeffs.items():
        if a < 0:
            raise FockError(f"weight {w} is not dominant")
        v.extend([j] * a)
    return tuple(v)


def hw_symbol_to_tableau(lam: Multipartition, s: Sequence[int]) -> tuple[Tableau, Charge]:
    """The tableau T attached to an e = INFINITY highest weight symbol, and v."""
    s = _check_pair(lam, s)
    v = hw_charge_inf(lam, s)
    m, _ = lattice_reading(lam, s)
    if m != v[0] + 1:
        raise FockError(f"inconsistent truncation level: m={m}, v_0={v[0]}")
    rows: dict[int, list[int]] = {}
    for c in range(lam.l):
        for b in row_prefix(lam, s, c, max(lam.height(c), s[c] - v[0])):
            if b > v[0]:
                rows.setdefault(b - v[0], []).append(c + 1)
    depth = max(rows, default=0)
    if any(x not in rows for x in range(1, depth + 1)):
        raise FockError("normalized entries do not fill consecutive tableau rows")
    T = tuple(tuple(rows[x]) for x in range(1, depth + 1))
    return T, v


def tableau_to_hw_symbol(T: Sequence[Sequence[int]], s: Sequence[int], v: Sequence[int]) -> Multipartition:
    s, v = tuple(s), tuple(v)
    l = len(s)
    shape, weight = lambda_mu_of(v, s)
    if tuple(len(r) for r in T) != shape:
        raise FockError(f"tableau shape {tuple(len(r) for r in T)} differs from {shape}")
    counts = Counter(x for r in T for x in r)
    if tuple(counts.get(c + 1, 0) for c in range(l)) != weight:
        raise FockError(f"tableau weight differs from {weight}")
    if not is_tableau(T):
        raise FockError("T is not row-strict and column-weak")
    entries: list[list[int]] = [[] for _ in range(l)]
    for x, row in enumerate(T, start=1):
        for letter in row:
            entries[letter - 1].append(x + v[0])
    rows = [sorted(e, reverse=True) + [v[0], v[0] - 1] for e in entries]
    sym = Symbol.from_rows(rows)
    if sym.charge != s:
        raise FockError(f"rebuilt charge {sym.charge} differs from {s}")
    return sym.lam


def is_tableau(T: Sequence[Sequence[int]]) -> bool:
    """Left-justified rows: rows strictly increase, columns weakly increase downward."""
    for r, row in enumerate(T):
        if any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
            return False
        if r and len(row) > len(T[r - 1]):
            return False
        if r and any(T[r - 1][k] > row[k] for k in range(len(row))):
            return False
    return True


@dataclass(frozen=True)
class SkewTableau:
    """Row c fills columns inner_c+1 .. outer_c; row l-1 is drawn on top."""

    outer: Charge
    inner: Charge
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "outer", tuple(self.outer))
        object.__setattr__(self, "inner", tuple(self.inner))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if not len(self.outer) == len(self.inner) == len(self.rows):
            raise FockError("outer, inner and rows must have the same length")
        for c, row in enumerate(self.rows):
            if len(row) != self.outer[c] - self.inner[c]:
                raise FockError(f"row {c} has {len(row)} boxes, shape wants {self.outer[c] - self.inner[c]}")

    @classmethod
    def trivial(cls, outer: Sequence[int], inner: Sequence[int]) -> "SkewTableau":
        return cls(tuple(outer), tuple(inner), tuple(tuple(range(t + 1, s + 1)) for s, t in zip(outer, inner)))

    @property
    def l(self) -> int:
        return len(self.rows)

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_empty(self) -> bool:
        return self.size() == 0

    def is_trivial(self) -> bool:
        return self == SkewTableau.trivial(self.outer, self.inner)

    def at(self, c: int, col: int) -> int | None:
        k = col - self.inner[c] - 1
        row = self.rows[c]
        return row[k] if 0 <= k < len(row) else None

    def is_valid(self) -> bool:
        for row in self.rows:
            if any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
                return False
        for c in range(self.l - 1):
            for col in range(self.inner[c + 1] + 1, self.outer[c + 1] + 1):
                above, below = self.at(c + 1, col), self.at(c, col)
                if below is not None and above > below:
                    return False
        return True

    def entries_exceed_inner(self) -> bool:
        return all(all(x > self.inner[c] for x in row) for c, row in enumerate(self.rows))

    def reading_word(self) -> list[tuple[int, int]]:
        """(value, row) pairs: rows from the top, each from right to left."""
        return [(x, c) for c in reversed(range(self.l)) for x in reversed(self.rows[c])]

    def display(self) -> str:
        lo = min(self.inner, default=0)
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        lines = []
        for c in reversed(range(self.l)):
            pad = [" " * width] * (self.inner[c] - lo)
            lines.append(" ".join(pad + [str(x).rjust(width) for x in self.rows[c]]).rstrip())
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner), "rows": [list(r) for r in self.rows]}


class LevelZeroWeight:
    """A level-0 weight stored on the eps_j basis."""

    __slots__ = ("eps",)

    def __init__(self, eps: Mapping[int, int] = ()):
        self.eps = {int(j): int(b) for j, b in sorted(dict(eps).items()) if b}

    @classmethod
    def from_weight(cls, w: WeightInf) -> "LevelZeroWeight":
        return cls(w.eps_coords())

    @classmethod
    def from_entries(cls, entries) -> "LevelZeroWeight":
        return cls(Counter(entries))

    @classmethod
    def from_omega(cls, omega: Mapping[int, int], e: int) -> "LevelZeroWeight":
        eps: Counter = Counter()
        for k, a in omega.items():
            for j in range(k - e + 1, k + 1):
                eps[j] += a
        return cls(eps)

    def to_weight(self) -> WeightInf:
        return WeightInf.from_eps(self.eps)

    def omega_coeffs(self, e: int) -> dict[int, int] | None:
        """a_k with sum a_k omega_k equal to self, or None when no such expansion exists."""
        if not self.eps:
            return {}
        lo, hi = min(self.eps), max(self.eps)
        a: dict[int, int] = {}
        for j in range(hi, lo - 1, -1):
            a[j] = self.eps.get(j, 0) - sum(a.get(j + r, 0) for r in range(1, e))
        out = {k: x for k, x in sorted(a.items()) if x}
        if LevelZeroWeight.from_omega(out, e) != self:
            return None
        return out

    def in_pi_plus(self, e: int) -> bool:
        om = self.omega_coeffs(e)
        return om is not None and all(x >= 0 for x in om.values())

    def is_zero(self) -> bool:
        return not self.eps

    def __add__(self, other: "LevelZeroWeight") -> "LevelZeroWeight":
        return LevelZeroWeight(_add(self.eps, other.eps))

    def __eq__(self, other) -> bool:
        return isinstance(other, LevelZeroWeight) and self.eps == other.eps

    def __hash__(self) -> int:
        return hash(tuple(self.eps.items()))

    def __repr__(self) -> str:
        return f"LevelZeroWeight({self.eps})"


def _add(x: Mapping[int, int], y: Mapping[int, int]) -> dict[int, int]:
    out = dict(x)
    for j, b in y.items():
        out[j] = out.get(j, 0) + b
    return out


def tableau_weight(tau: SkewTableau) -> LevelZeroWeight:
    return LevelZeroWeight.from_entries(x for row in tau.rows for x in row)


def level_parts(lam: Multipartition, s: Sequence[int], e) -> tuple[SkewTableau, Charge]:
    """Split a totally periodic semistandard symbol into its level-0 tableau and s°."""
    e = _finite_e(e)
    s = _check_pair(lam, s)
    if not is_semistandard(lam, s):
        raise FockError(f"({lam}, {s}) is not semistandard")
    trace = peel(lam, s, e)
    if not trace.totally_periodic:
        raise FockError(f"({lam}, {s}) is not totally {e}-periodic")
    t = trace.final_charge
    rows = []
    for c in range(lam.l):
        # B(∅, t) must sit inside row c as the set of entries <= t_c
        assert first_gap(lam, s, c) > t[c], (lam, s, t, c)
        row = [b for b in row_prefix(lam, s, c, max(lam.height(c), s[c] - t[c])) if b > t[c]]
        assert len(row) == s[c] - t[c], (lam, s, t, c)
        rows.append(tuple(sorted(row)))
    return SkewTableau(s, t, tuple(rows)), t


@dataclass(frozen=True)
class TableauStep:
    form: tuple[int, ...]
    rows: tuple[int, ...]
    after: SkewTableau

    def to_json(self) -> dict:
        return {"form": list(self.form), "rows": list(self.rows), "outer_after": list(self.after.outer)}


def tableau_period(tau: SkewTableau, e: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """(form, rows) of the e-period: last occurrences of M, M-1, ... in reading order."""
    word = tau.reading_word()
    if not word:
        return None
    top = max(x for x, _ in word)
    rows, last_pos = [], -1
    for k in range(e):
        pos = max((p for p, (x, _) in enumerate(word) if x == top - k), default=None)
        if pos is None or pos < last_pos:
            return None
        rows.append(word[pos][1])
        last_pos = pos
    return tuple(range(top, top - e, -1)), tuple(rows)


def tableau_peel(tau: SkewTableau, e) -> tuple[SkewTableau, list[TableauStep]]:
    e = _finite_e(e)
    steps: list[TableauStep] = []
    cur = tau
    while True:
        if cur.is_trivial() and in_T(cur.outer, e):
            break
        found = tableau_period(cur, e)
        if found is None:
            break
        form, rows = found
        new_rows = [list(r) for r in cur.rows]
        for value, c in zip(form, rows):
            new_rows[c].remove(value)
        outer = tuple(t + len(r) for t, r in zip(cur.inner, new_rows))
        cur = SkewTableau(outer, cur.inner, tuple(tuple(r) for r in new_rows))
        steps.append(TableauStep(form, rows, cur))
    return cur, steps


def is_totally_periodic_tableau(tau: SkewTableau, e) -> bool:
    if not tau.entries_exceed_inner():
        return False
    final, _ = tableau_peel(tau, e)
    return final.is_empty()


@dataclass(frozen=True)
class DecomposedWeight:
    t: Charge
    gamma: LevelZeroWeight
    omega: tuple[tuple[int, int], ...]

    def reconstruct(self) -> WeightInf:
        return WeightInf.from_charge(self.t) + self.gamma.to_weight()

    def to_json(self) -> dict:
        return {"t": list(self.t), "omega": {str(k): a for k, a in self.omega}}

    @classmethod
    def from_json(cls, data: Mapping, e: int) -> "DecomposedWeight":
        omega = {int(k): int(a) for k, a in data["omega"].items()}
        return cls(tuple(data["t"]), LevelZeroWeight.from_omega(omega, e), tuple(sorted(omega.items())))


def T_charges(l: int, e: int, lo: int, hi: int) -> Iterator[Charge]:
    """Elements of T_{l,e} with entries in [lo, hi]."""

    def rec(prefix: list[int]):
        if len(prefix) == l:
            yield tuple(prefix)
            return
        start = prefix[-1] if prefix else lo
        stop = min(hi, prefix[0] + e - 1) if prefix else hi
        for x in range(start, stop + 1):
            yield from rec(prefix + [x])

    yield from rec([])


def decompose_weight(nu: WeightInf, l: int, e) -> list[DecomposedWeight]:
    """All nu = Lambda_t + sum a_k omega_k with t in T_{l,e}, a_k >= 0 and a_k = 0 for k < t_0 + e.

    With k = t_0 + e allowed the family is infinite (Lambda_t equals
    Lambda_{t - e} plus one omega_{t_c} per component), so only t inside
    [min support - e, max support] are tried.  The largest-sum t always lies
    there: a nonzero nonnegative omega sum has a positive top coefficient, so
    t_{l-1} cannot exceed the support of nu.  Results are sorted by decreasing
    sum of t.
    """
    e = _finite_e(e)
    if nu.level != l:
        raise FockError(f"weight {nu} has level {nu.level}, expected {l}")
    support = nu.support()
    if not support:
        return []
    out = []
    for t in T_charges(l, e, min(support) - e, max(support)):
        gamma = LevelZeroWeight.from_weight(nu - WeightInf.from_charge(t))
        omega = gamma.omega_coeffs(e)
        if omega is None or any(a < 0 for a in omega.values()):
            continue
        if any(k < t[0] + e for k in omega):
            continue
        out.append(DecomposedWeight(t, gamma, tuple(sorted(omega.items()))))
    out.sort(key=lambda d: (-sum(d.t), d.t))
    return out


def canonical_decomposition(nu: WeightInf, l: int, e) -> DecomposedWeight | None:
    """The decomposition with the fewest periods, i.e. the largest sum of t.

    Several t can pass the acceptance test when some a_k sits at k = t_0 + e;
    the final charge of a peel is the one with the largest sum.
    """
    found = decompose_weight(nu, l, e)
    return found[0] if found else None


def forced_node_counts(s: Sequence[int], nu: WeightInf) -> dict[int, int] | None:
    """N_j >= 0 with Lambda_s - sum N_j alpha_j = nu, or None if no such counts exist."""
    diff = WeightInf.from_charge(s) - nu
    if diff.level != 0:
        return None
    if diff.is_zero():
        return {}
    lo, hi = min(diff.support()), max(diff.support())
    counts: dict[int, int] = {}
    prev, cur = 0, 0
    # coefficient of Lambda_x in sum N_j alpha_j is 2N_x - N_{x-1} - N_{x+1}
    for x in range(lo, hi + 2):
        nxt = 2 * cur - prev - diff[x]
        if nxt < 0:
            return None
        if nxt:
            counts[x + 1] = nxt
        prev, cur = cur, nxt
    if cur != 0 or prev != 0:
        return None
    return counts


def forced_rank(s: Sequence[int], nu: WeightInf) -> int | None:
    counts = forced_node_counts(s, nu)
    return None if counts is None else sum(counts.values())


def skew_fillings(outer: Sequence[int], inner: Sequence[int], entries: Counter) -> Iterator[SkewTableau]:
    """Skew tableaux of shape outer/inner using exactly the multiset ``entries``,
    with every entry of row c above inner_c."""
    outer, inner = tuple(outer), tuple(inner)
    l = len(outer)
    if any(o < i for o, i in zip(outer, inner)):
        return
    if sum(o - i for o, i in zip(outer, inner)) != sum(entries.values()):
        return
    values = sorted(entries)
    rows: list[list[int]] = [[] for _ in range(l)]
    left = Counter(entries)
    order = [(c, col) for c in reversed(range(l)) for col in range(inner[c] + 1, outer[c] + 1)]

    def above(c: int, col: int) -> int | None:
        if c + 1 >= l:
            return None
        k = col - inner[c + 1] - 1
        r = rows[c + 1]
        return r[k] if 0 <= k < len(r) else None

    def rec(idx: int):
        if idx == len(order):
            yield SkewTableau(outer, inner, tuple(tuple(r) for r in rows))
            return
        c, col = order[idx]
        low = inner[c] + 1
        if rows[c]:
            low = max(low, rows[c][-1] + 1)
        up = above(c, col)
        if up is not None:
            low = max(low, up)
        for x in values:
            if x < low or not left[x]:
                continue
            left[x] -= 1
            rows[c].append(x)
            yield from rec(idx + 1)
            rows[c].pop()
            left[x] += 1

    yield from rec(0)


def totally_periodic_tableaux(
    outer: Sequence[int], inner: Sequence[int], gamma: LevelZeroWeight, e
) -> list[SkewTableau]:
    """Tab^e of shape outer/inner and weight gamma, built by undoing the peel.

    Peeling removes periods with weakly decreasing maxima, so the periods of
    gamma are re-inserted in increasing order.  A letter M-k may only go to a
    row where it becomes the lowest occurrence, rows weakly descending along
    the period, and every intermediate tableau must be valid and must not be
    a stopping point of the peel.
    """
    e = _finite_e(e)
    outer, inner = tuple(outer), tuple(inner)
    l = len(outer)
    if len(inner) != l or not in_T(inner, e) or any(i > o for i, o in zip(inner, outer)):
        return []
    omega = gamma.omega_coeffs(e)
    if omega is None or any(a < 0 for a in omega.values()):
        return []
    if sum(omega.values()) * e != sum(o - i for o, i in zip(outer, inner)):
        return []
    forms = [k for k, a in sorted(omega.items()) for _ in range(a)]
    found: set[SkewTableau] = set()

    def insert_period(rows: list[list[int]], top: int, k: int, max_row: int):
        if k == e:
            yield rows
            return
        value = top - k
        for c in range(max_row, -1, -1):
            if value <= inner[c] or value in rows[c] or len(rows[c]) >= outer[c] - inner[c]:
                continue
            if any(value in rows[d] for d in range(c)):
                continue
            new = [list(r) for r in rows]
            new[c] = sorted(new[c] + [value])
            yield from insert_period(new, top, k + 1, c)

    def rec(idx: int, tau: SkewTableau):
        if idx == len(forms):
            if tau.outer == outer:
                found.add(tau)
            return
        top = forms[idx]
        if any(x > top for row in tau.rows for x in row):
            return
        for rows in insert_period([list(r) for r in tau.rows], top, 0, l - 1):
            nxt = SkewTableau(
                tuple(i + len(r) for i, r in zip(inner, rows)), inner, tuple(tuple(r) for r in rows)
            )
            if not nxt.is_valid() or (nxt.is_trivial() and in_T(nxt.outer, e)):
                continue
            rec(idx + 1, nxt)

    rec(0, SkewTableau(inner, inner, tuple(() for _ in range(l))))
    out = sorted(found, key=lambda tau: tau.rows)
    for tau in out:
        assert is_totally_periodic_tableau(tau, e) and tableau_weight(tau) == gamma, tau
    return out


def _weakly_increasing(s: Sequence[int]) -> bool:
    return all(s[c] <= s[c + 1] for c in range(len(s) - 1))


def count_m(s: Sequence[int], nu: WeightInf, e) -> int:
    """Number of e-highest weight vertices of INFINITY-weight nu among the semistandard symbols of charge s.

    Sums |Tab^e_{s/t, nu - Lambda_t}| over every t in T_{l,e} below s.  The
    final charge of a peel satisfies s_0 - t_0 <= rank, so t_0 >= s_0 - n - e
    with n the rank forced by nu is a safe window.
    """
    e = _finite_e(e)
    s = tuple(s)
    if not _weakly_increasing(s):
        raise FockError(f"s={s} must be weakly increasing")
    if nu.level != len(s):
        return 0
    n = forced_rank(s, nu)
    if n is None:
        return 0
    total = 0
    for t in T_charges(len(s), e, s[0] - n - e, s[-1]):
        if any(tc > sc for tc, sc in zip(t, s)):
            continue
        gamma = LevelZeroWeight.from_weight(nu - WeightInf.from_charge(t))
        if not gamma.in_pi_plus(e):
            continue
        total += len(totally_periodic_tableaux(s, t, gamma, e))
    return total


def increasing_charges(l: int, total: int, lo: int, hi0: int) -> Iterator[Charge]:
    """Weakly increasing integer l-tuples with the given sum and lo <= v_0 <= hi0."""

    def rec(prefix: list[int], left: int):
        slots = l - len(prefix)
        if slots == 1:
            if not prefix or left >= prefix[-1]:
                yield tuple(prefix + [left])
            return
        start = prefix[-1] if prefix else lo
        stop = left // slots
        if not prefix:
            stop = min(stop, hi0)
        for x in range(start, stop + 1):
            yield from rec(prefix + [x], left - x)

    if l == 1:
        if lo <= total <= hi0:
            yield (total,)
        return
    yield from rec([], total)


def v_candidates(s: Sequence[int], nu: WeightInf) -> Iterator[Charge]:
    """v in T_{l,INFINITY} with sum v = sum s and v_0 <= s_0, reachable below nu in rank.

    The node counts N of Lambda_s -> Lambda_v satisfy N_x >= x - v_0 on
    (v_0, s_0], so v_0 >= s_0 - rank.
    """
    s = tuple(s)
    budget = forced_rank(s, nu)
    if budget is None:
        return
    for v in increasing_charges(len(s), sum(s), s[0] - budget, s[0]):
        r = forced_rank(s, WeightInf.from_charge(v))
        if r is not None and r <= budget:
            yield v


def _M_term(args) -> int:
    v, s, nu, e = args
    shape, weight = lambda_mu_of(v, s)
    k = kostka(shape, weight)
    return k * count_m(v, nu, e) if k else 0


def count_M(s: Sequence[int], nu: WeightInf, e, jobs: int = 1) -> int:
    """Number of e-highest weight vertices of INFINITY-weight nu in the whole crystal of charge s."""
    e = _finite_e(e)
    s = tuple(s)
    if not _weakly_increasing(s):
        raise FockError(f"s={s} must be weakly increasing")
    work = [(v, s, nu, e) for v in v_candidates(s, nu)]
    if jobs > 1 and len(work) > 4:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_M_term, work))
    return sum(_M_term(w) for w in work)
