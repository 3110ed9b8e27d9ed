"""Exhaustive conformance suites over small crystals.

Each suite enumerates every l-partition up to a rank bound for a handful of
charges and checks one family of identities, reporting the first
counterexample it meets.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .crystal import (
    InconsistencyError,
    e_tilde,
    eps_phi,
    f_tilde,
    generate_crystal,
    is_highest_weight,
    live_residues,
    reduced_i_word,
    reduced_word_from_symbol,
    weight_aff,
    weight_inf,
)
from .decomposition import (
    count_M,
    count_m,
    forced_rank,
    hw_charge_inf,
    hw_symbol_to_tableau,
    increasing_charges,
    kostka,
    lambda_mu_of,
    tableau_to_hw_symbol,
)
from .multipartition import (
    INFINITY,
    Charge,
    FockError,
    Multipartition,
    addable_nodes,
    content,
    format_charge,
    multipartitions,
    multipartitions_upto,
)
from .symbol import (
    find_period,
    is_semistandard,
    is_totally_periodic,
    is_totally_periodic_inf,
    remove_period,
)
from .weights import WeightAff, WeightInf, project_weight

SUITES = (
    "hw-equivalence",
    "weight-projection",
    "counting",
    "invariances",
    "word-equality",
    "subgraph",
    "semistandard",
    "crystal-sanity",
)


@dataclass
class VerifyConfig:
    suite: str = "all"
    l: int = 2
    e: int = 2
    max_rank: int = 5
    charges: list[Charge] | None = None
    jobs: int = 1

    def charge_list(self) -> list[Charge]:
        if self.charges:
            return [tuple(s) for s in self.charges]
        if self.l == 1:
            return [(0,)]
        return [(0,) * self.l, (0,) * (self.l - 1) + (1,)]


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, message: str):
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = message

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "counterexample": self.counterexample,
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else f"  first counterexample: {self.counterexample}"
        return f"{status}  {self.name}  ({self.checked} checks){tail}"


def _tag(lam: Multipartition, s: Sequence[int], e=None) -> str:
    base = f"lambda={lam} s=({format_charge(s)})"
    return base if e is None else f"{base} e={'inf' if e == INFINITY else e}"


def semistandard_oracle(s: Sequence[int], max_rank: int) -> set[Multipartition]:
    """Vertices reachable from the empty multipartition in the INFINITY crystal."""
    s = tuple(s)
    layer = {Multipartition.empty(len(s))}
    seen = set(layer)
    for _ in range(max_rank):
        nxt = set()
        for lam in layer:
            for j in {content(n, s) for n in addable_nodes(lam)}:
                mu = f_tilde(lam, s, INFINITY, j)
                if mu is not None:
                    nxt.add(mu)
        seen |= nxt
        layer = nxt
    return seen


def check_hw_equivalence(cfg: VerifyConfig) -> list[CheckResult]:
    fin = CheckResult(f"highest weight <=> totally periodic (e={cfg.e})")
    inf = CheckResult("highest weight <=> reverse lattice reading (e=inf)")
    for s in cfg.charge_list():
        for lam in multipartitions_upto(cfg.max_rank, len(s)):
            fin.checked += 1
            hw, tp = is_highest_weight(lam, s, cfg.e), is_totally_periodic(lam, s, cfg.e)
            if hw != tp:
                fin.fail(f"{_tag(lam, s, cfg.e)} hw={hw} totally_periodic={tp}")
            inf.checked += 1
            hw, tp = is_highest_weight(lam, s, INFINITY), is_totally_periodic_inf(lam, s)
            if hw != tp:
                inf.fail(f"{_tag(lam, s)} hw={hw} reverse_lattice={tp}")
    return [fin, inf]


def check_weight_projection(cfg: VerifyConfig) -> list[CheckResult]:
    proj = CheckResult(f"wt_e = pi(wt_inf) (e={cfg.e})")
    for s in cfg.charge_list():
        for lam in multipartitions_upto(cfg.max_rank, len(s)):
            proj.checked += 1
            left, right = weight_aff(lam, s, cfg.e), project_weight(weight_inf(lam, s), cfg.e)
            if left != right:
                proj.fail(f"{_tag(lam, s, cfg.e)} wt_e={left} pi(wt_inf)={right}")
    kernel = CheckResult(f"pi(omega_k) = 0 for k in [-10, 10] (e={cfg.e})")
    for k in range(-10, 11):
        kernel.checked += 1
        img = project_weight(WeightInf.omega(k, cfg.e), cfg.e)
        if img != WeightAff(cfg.e):
            kernel.fail(f"pi(omega_{k}) = {img}")
    return [proj, kernel]


def check_word_equality(cfg: VerifyConfig) -> list[CheckResult]:
    words = CheckResult(f"reduced i-word from nodes = from symbol (e={cfg.e} and e=inf)")
    weights = CheckResult(f"node-count weight = (phi - eps) weight (e={cfg.e})")
    for s in cfg.charge_list():
        for lam in multipartitions_upto(cfg.max_rank, len(s)):
            for e in (cfg.e, INFINITY):
                for i in live_residues(lam, s, e):
                    words.checked += 1
                    a, b = reduced_i_word(lam, s, e, i), reduced_word_from_symbol(lam, s, e, i)
                    if a != b:
                        words.fail(f"{_tag(lam, s, e)} i={i}: {a} vs {b}")
            weights.checked += 1
            try:
                weight_aff(lam, s, cfg.e)
                weight_inf(lam, s)
            except InconsistencyError as exc:
                weights.fail(str(exc))
    return [words, weights]


def check_invariances(cfg: VerifyConfig) -> list[CheckResult]:
    strings = CheckResult(f"eps_i, phi_i unchanged by period removal (e={cfg.e})")
    wt_e = CheckResult(f"wt_e unchanged by period removal (e={cfg.e})")
    wt_i = CheckResult(f"wt_inf drops by omega_M on period removal (e={cfg.e})")
    for s in cfg.charge_list():
        for lam in multipartitions_upto(cfg.max_rank, len(s)):
            period = find_period(lam, s, cfg.e)
            if period is None:
                continue
            lam2, s2 = remove_period(lam, s, cfg.e)
            tag = _tag(lam, s, cfg.e)
            for i in range(cfg.e):
                strings.checked += 1
                before, after = eps_phi(lam, s, cfg.e, i), eps_phi(lam2, s2, cfg.e, i)
                if before != after:
                    strings.fail(f"{tag} i={i}: {before} -> {after}")
            wt_e.checked += 1
            if weight_aff(lam, s, cfg.e) != weight_aff(lam2, s2, cfg.e):
                wt_e.fail(tag)
            wt_i.checked += 1
            diff = weight_inf(lam, s) - weight_inf(lam2, s2)
            if diff != WeightInf.omega(period.top, cfg.e):
                wt_i.fail(f"{tag}: difference {diff}, expected omega_{period.top}")
    return [strings, wt_e, wt_i]


def check_subgraph(cfg: VerifyConfig) -> list[CheckResult]:
    res = CheckResult(f"edges of G_e lie in G_inf with content = residue mod e (e={cfg.e})")
    for s in cfg.charge_list():
        fin = generate_crystal(s, cfg.e, cfg.max_rank, jobs=cfg.jobs)
        inf_edges = generate_crystal(s, INFINITY, cfg.max_rank, jobs=cfg.jobs).edge_set()
        lams = [v.lam for v in fin.vertices]
        for ed in fin.edges:
            res.checked += 1
            src, dst = lams[ed.src], lams[ed.dst]
            if (src, dst, ed.content) not in inf_edges or ed.content % cfg.e != ed.residue:
                res.fail(f"{src} -{ed.residue} ({ed.content})-> {dst} at s=({format_charge(s)})")
    return [res]


def check_semistandard(cfg: VerifyConfig) -> list[CheckResult]:
    res = CheckResult("semistandard <=> reachable from the empty multipartition (e=inf)")
    for s in cfg.charge_list():
        if any(s[c] > s[c + 1] for c in range(len(s) - 1)):
            continue
        reach = semistandard_oracle(s, cfg.max_rank)
        for lam in multipartitions_upto(cfg.max_rank, len(s)):
            res.checked += 1
            if is_semistandard(lam, s) != (lam in reach):
                res.fail(f"{_tag(lam, s)} semistandard={is_semistandard(lam, s)}")
    return [res]


def check_crystal_sanity(cfg: VerifyConfig) -> list[CheckResult]:
    inverse = CheckResult(f"e_i(f_i(x)) = x and f_i(e_i(x)) = x (e={cfg.e})")
    shift = CheckResult(f"every arrow lowers the weight by alpha_i (e={cfg.e})")
    degree = CheckResult(f"per-residue in/out degree <= 1 (e={cfg.e})")
    determinism = CheckResult("serialized crystal is byte-identical across runs")
    for s in cfg.charge_list():
        graph = generate_crystal(s, cfg.e, cfg.max_rank, jobs=cfg.jobs)
        lams = [v.lam for v in graph.vertices]
        for lam in lams:
            for i in range(cfg.e):
                inverse.checked += 1
                up = f_tilde(lam, s, cfg.e, i)
                if up is not None and e_tilde(up, s, cfg.e, i) != lam:
                    inverse.fail(f"{_tag(lam, s, cfg.e)} i={i} via f")
                down = e_tilde(lam, s, cfg.e, i)
                if down is not None and f_tilde(down, s, cfg.e, i) != lam:
                    inverse.fail(f"{_tag(lam, s, cfg.e)} i={i} via e")
        outs, ins = set(), set()
        for ed in graph.edges:
            shift.checked += 1
            want = graph.vertices[ed.src].wt_aff - WeightAff.simple_root(ed.residue, cfg.e)
            if graph.vertices[ed.dst].wt_aff != want or lams[ed.dst].rank != lams[ed.src].rank + 1:
                shift.fail(f"{lams[ed.src]} -> {lams[ed.dst]} residue {ed.residue}")
            degree.checked += 1
            if (ed.src, ed.residue) in outs or (ed.dst, ed.residue) in ins:
                degree.fail(f"residue {ed.residue} at {lams[ed.src]} -> {lams[ed.dst]}")
            outs.add((ed.src, ed.residue))
            ins.add((ed.dst, ed.residue))
        determinism.checked += 1
        again = generate_crystal(s, cfg.e, cfg.max_rank, jobs=cfg.jobs)
        if graph.to_json() != again.to_json() or graph.to_dot() != again.to_dot():
            determinism.fail(f"s=({format_charge(s)})")
    return [inverse, shift, degree, determinism]


def check_counting(cfg: VerifyConfig) -> list[CheckResult]:
    kos = CheckResult("INFINITY highest weight vertices of weight Lambda_v = Kostka number")
    bij = CheckResult("symbol -> tableau -> symbol is the identity")
    small_m = CheckResult(f"count_m = brute force in the semistandard component (e={cfg.e})")
    big_m = CheckResult(f"count_M = brute force in the whole crystal (e={cfg.e})")
    for s in cfg.charge_list():
        if any(s[c] > s[c + 1] for c in range(len(s) - 1)):
            continue
        l = len(s)
        by_v: dict[Charge, int] = {}
        for lam in multipartitions_upto(cfg.max_rank + 1, l):
            if not is_highest_weight(lam, s, INFINITY):
                continue
            v = hw_charge_inf(lam, s)
            by_v[v] = by_v.get(v, 0) + 1
            bij.checked += 1
            T, v2 = hw_symbol_to_tableau(lam, s)
            if tableau_to_hw_symbol(T, s, v2) != lam:
                bij.fail(_tag(lam, s))
        # every v whose forced rank fits the enumeration, including zero counts
        for v in _charges_with_sum(s, cfg.max_rank + 1):
            kos.checked += 1
            want = kostka(*lambda_mu_of(v, s))
            if by_v.get(v, 0) != want:
                kos.fail(f"s=({format_charge(s)}) v=({format_charge(v)}): {by_v.get(v, 0)} vertices, K={want}")
        weights = set()
        for lam in multipartitions_upto(cfg.max_rank, l):
            if is_semistandard(lam, s) and is_highest_weight(lam, s, cfg.e):
                weights.add(weight_inf(lam, s))
        for nu in sorted(weights, key=str):
            n = forced_rank(s, nu)
            semi = full = 0
            for lam in multipartitions(n, l):
                if is_highest_weight(lam, s, cfg.e) and weight_inf(lam, s) == nu:
                    full += 1
                    semi += is_semistandard(lam, s)
            small_m.checked += 1
            got = count_m(s, nu, cfg.e)
            if got != semi:
                small_m.fail(f"s=({format_charge(s)}) nu={nu}: count_m={got}, brute={semi}")
            big_m.checked += 1
            got = count_M(s, nu, cfg.e, jobs=cfg.jobs)
            if got != full:
                big_m.fail(f"s=({format_charge(s)}) nu={nu}: count_M={got}, brute={full}")
    return [kos, bij, small_m, big_m]


def _charges_with_sum(s: Sequence[int], max_rank: int) -> Iterable[Charge]:
    """Weakly increasing v with sum s, v_0 <= s_0, forced rank from s at most max_rank."""
    for v in increasing_charges(len(s), sum(s), s[0] - max_rank, s[0]):
        r = forced_rank(s, WeightInf.from_charge(v))
        if r is not None and r <= max_rank:
            yield v


CHECKS: dict[str, Callable[[VerifyConfig], list[CheckResult]]] = {
    "hw-equivalence": check_hw_equivalence,
    "weight-projection": check_weight_projection,
    "counting": check_counting,
    "invariances": check_invariances,
    "word-equality": check_word_equality,
    "subgraph": check_subgraph,
    "semistandard": check_semistandard,
    "crystal-sanity": check_crystal_sanity,
}


def run_suite(cfg: VerifyConfig) -> list[CheckResult]:
    if cfg.e == INFINITY:
        raise FockError("verification suites need a finite e")
    if cfg.suite == "all":
        names = SUITES
    elif cfg.suite in CHECKS:
        names = (cfg.suite,)
    else:
        raise FockError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)} or all")
    for s in cfg.charge_list():
        if len(s) != cfg.l:
            raise FockError(f"charge {s} does not have length l={cfg.l}")
    out: list[CheckResult] = []
    for name in names:
        out.extend(CHECKS[name](cfg))
    return out
