"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (bad partition, e < 2, ...),
2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .crystal import eps_phi, generate_crystal, is_highest_weight, live_residues, weight_aff, weight_inf
from .decomposition import (
    canonical_decomposition,
    count_M,
    count_m,
    hw_symbol_to_tableau,
    kostka,
    level_parts,
    tableau_to_hw_symbol,
)
from .multipartition import (
    INFINITY,
    FockError,
    format_charge,
    make_partition,
    parse_charge,
    parse_multipartition,
)
from .symbol import (
    Symbol,
    find_period,
    is_semistandard,
    is_totally_periodic,
    is_totally_periodic_inf,
    peel,
    reading_word,
    truncated_symbol,
)
from .verify import SUITES, VerifyConfig, run_suite
from .weights import WeightInf

VALUE_FLAGS = {
    "--lambda", "--charge", "--e", "--max-rank", "--component-of", "--format",
    "--shape", "--weight", "--nu", "--which", "--suite", "--l", "--charges",
    "--jobs", "--rows", "--v", "--vertex-cap",
}


def parse_e(text: str):
    if text.strip().lower() in ("inf", "infinity", "∞"):
        return INFINITY
    try:
        e = int(text)
    except ValueError:
        raise FockError(f"e must be an integer >= 2 or 'inf', got {text!r}") from None
    if e < 2:
        raise FockError(f"e must be >= 2, got {e}")
    return e


def _e_json(e):
    return "inf" if e == INFINITY else e


def _finite(e, verb: str) -> int:
    if e is None:
        raise FockError(f"{verb} needs --e")
    if e == INFINITY:
        raise FockError(f"{verb} needs a finite e")
    return e


def _pair(args):
    if args.lambda_ is None or args.charge is None:
        raise FockError("--lambda and --charge are required")
    lam = parse_multipartition(args.lambda_)
    s = parse_charge(args.charge)
    if len(s) != lam.l:
        raise FockError(f"charge ({format_charge(s)}) has length {len(s)}, multipartition has {lam.l} components")
    return lam, s


def _emit(args, obj, text: str) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def cmd_symbol(args) -> None:
    lam, s = _pair(args)
    sym = Symbol(lam, s)
    obj = {"lambda": str(lam), "charge": list(s), "rows": sym.rows(1)}
    text = sym.display()
    if args.e is not None and args.e != INFINITY:
        obj["truncated"] = truncated_symbol(lam, s, args.e)
        word = [x.value for x in reading_word(lam, s, args.e)]
        obj["reading_word"] = word
        text += "\nreading word: " + " ".join(map(str, word))
    _emit(args, obj, text)


def cmd_period(args) -> None:
    lam, s = _pair(args)
    e = _finite(args.e, "period")
    p = find_period(lam, s, e)
    obj = {"periodic": p is not None, "period": None if p is None else p.to_json()}
    text = "no period" if p is None else f"{e}-period with form {p.form}"
    _emit(args, obj, text)


def cmd_peel(args) -> None:
    lam, s = _pair(args)
    e = _finite(args.e, "peel")
    trace = peel(lam, s, e)
    _emit(args, trace.to_json(), trace.describe())


def cmd_hw(args) -> None:
    lam, s = _pair(args)
    e = args.e
    hw = is_highest_weight(lam, s, e)
    residues = live_residues(lam, s, e)
    strings = {str(i): dict(zip(("eps", "phi"), eps_phi(lam, s, e, i))) for i in residues}
    obj = {"highest_weight": hw, "e": _e_json(e), "strings": strings}
    if e == INFINITY:
        obj["reverse_lattice"] = is_totally_periodic_inf(lam, s)
    else:
        obj["totally_periodic"] = is_totally_periodic(lam, s, e)
        obj["wt_e"] = list(weight_aff(lam, s, e).coeffs)
    obj["wt_inf"] = weight_inf(lam, s).to_json()
    _emit(args, obj, "true" if hw else "false")


def cmd_crystal(args) -> None:
    if args.charge is None or args.max_rank is None:
        raise FockError("--charge and --max-rank are required")
    s = parse_charge(args.charge)
    graph = generate_crystal(s, args.e, args.max_rank, vertex_cap=args.vertex_cap, jobs=args.jobs)
    if args.component_of:
        graph = graph.component(parse_multipartition(args.component_of))
    if args.format == "dot":
        sys.stdout.write(graph.to_dot())
    elif args.format == "json":
        print(graph.to_json())
    else:
        hw = [str(v.lam) for v in graph.highest_weight_vertices()]
        print(f"{len(graph.vertices)} vertices, {len(graph.edges)} edges")
        print("highest weight vertices: " + ", ".join(hw))


def cmd_branch(args) -> None:
    if args.charge is None or args.max_rank is None:
        raise FockError("--charge and --max-rank are required")
    s = parse_charge(args.charge)
    e = _finite(args.e, "branch")
    if any(s[c] > s[c + 1] for c in range(len(s) - 1)):
        raise FockError("branch needs a weakly increasing charge")
    graph = generate_crystal(s, e, args.max_rank, vertex_cap=args.vertex_cap, jobs=args.jobs)
    rows, lines = [], []
    for v in graph.vertices:
        if not (v.hw and is_semistandard(v.lam, s)):
            continue
        tau, t = level_parts(v.lam, s, e)
        dec = canonical_decomposition(v.wt_inf, len(s), e)
        rows.append({
            "lambda": str(v.lam),
            "rank": v.rank,
            "wt_inf": v.wt_inf.to_json(),
            "decomposition": None if dec is None else dec.to_json(),
            "level_zero": tau.to_json(),
        })
        omega = "" if dec is None else " + ".join(f"{a}*w{k}" if a > 1 else f"w{k}" for k, a in dec.omega)
        lines.append(f"{str(v.lam):<24} wt_inf = {v.wt_inf}    t = ({format_charge(t)})  gamma = {omega or '0'}")
    _emit(args, {"charge": list(s), "e": e, "max_rank": args.max_rank, "vertices": rows}, "\n".join(lines))


def cmd_kostka(args) -> None:
    if args.shape is None or args.weight is None:
        raise FockError("--shape and --weight are required")
    shape = make_partition([int(x) for x in args.shape.replace(",", ".").split(".") if x])
    weight = parse_charge(args.weight)
    k = kostka(shape, weight)
    _emit(args, {"shape": list(shape), "weight": list(weight), "kostka": k}, str(k))


def _parse_rows(text: str) -> list[list[int]]:
    return [[int(x) for x in row.split(".") if x] for row in text.split("/")]


def cmd_tableau(args) -> None:
    if args.rows is not None:
        if args.charge is None or args.v is None:
            raise FockError("--rows needs --charge and --v")
        s, v = parse_charge(args.charge), parse_charge(args.v)
        lam = tableau_to_hw_symbol(_parse_rows(args.rows), s, v)
        _emit(args, {"lambda": str(lam), "charge": list(s)}, str(lam))
        return
    lam, s = _pair(args)
    T, v = hw_symbol_to_tableau(lam, s)
    text = "\n".join(" ".join(map(str, row)) for row in T) + f"\nv = ({format_charge(v)})"
    _emit(args, {"tableau": [list(r) for r in T], "v": list(v), "shape": [len(r) for r in T]}, text)


def cmd_multiplicity(args) -> None:
    if args.charge is None or args.nu is None:
        raise FockError("--charge and --nu are required")
    s = parse_charge(args.charge)
    e = _finite(args.e, "multiplicity")
    try:
        nu = WeightInf.from_json(json.loads(args.nu))
    except (ValueError, AttributeError, TypeError) as exc:
        raise FockError(f"cannot parse --nu: {exc}") from None
    value = count_m(s, nu, e) if args.which == "m" else count_M(s, nu, e, jobs=args.jobs)
    _emit(args, {"charge": list(s), "e": e, "nu": nu.to_json(), "which": args.which, "value": value}, str(value))


def cmd_verify(args) -> None:
    charges = None
    if args.charges:
        charges = [parse_charge(chunk) for chunk in args.charges.split(";") if chunk.strip()]
    l = args.l if args.l is not None else (len(charges[0]) if charges else 2)
    cfg = VerifyConfig(
        suite=args.suite,
        l=l,
        e=_finite(args.e, "verify"),
        max_rank=args.max_rank if args.max_rank is not None else 5,
        charges=charges,
        jobs=args.jobs,
    )
    results = run_suite(cfg)
    ok = all(r.passed for r in results)
    _emit(args, {"passed": ok, "results": [r.to_json() for r in results]}, "\n".join(r.line() for r in results))
    if not ok:
        raise _VerifyFailed()


class _VerifyFailed(Exception):
    pass


COMMANDS = {
    "symbol": cmd_symbol,
    "period": cmd_period,
    "peel": cmd_peel,
    "hw": cmd_hw,
    "crystal": cmd_crystal,
    "branch": cmd_branch,
    "kostka": cmd_kostka,
    "tableau": cmd_tableau,
    "multiplicity": cmd_multiplicity,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fockcrystal", description="Fock space crystals, symbols and periods.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, help_: str, formats=("text", "json")) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--e", type=str, default="inf" if name in ("symbol", "hw", "crystal") else None)
        p.add_argument("--jobs", type=int, default=1)
        return p

    for name, help_ in (
        ("symbol", "print the symbol of (lambda, s)"),
        ("period", "find the e-period"),
        ("peel", "run the peeling procedure"),
        ("hw", "highest weight test"),
    ):
        p = add(name, help_)
        p.add_argument("--lambda", dest="lambda_")
        p.add_argument("--charge")

    p = add("crystal", "generate the crystal graph", formats=("dot", "json", "text"))
    p.add_argument("--charge")
    p.add_argument("--max-rank", type=int)
    p.add_argument("--component-of")
    p.add_argument("--vertex-cap", type=int, default=250_000)

    p = add("branch", "highest weight vertices of the empty component")
    p.add_argument("--charge")
    p.add_argument("--max-rank", type=int)
    p.add_argument("--vertex-cap", type=int, default=250_000)

    p = add("kostka", "Kostka number (row-strict convention)")
    p.add_argument("--shape")
    p.add_argument("--weight")

    p = add("tableau", "highest weight symbol <-> tableau")
    p.add_argument("--of-symbol", action="store_true", help="map --lambda/--charge to its tableau (default)")
    p.add_argument("--lambda", dest="lambda_")
    p.add_argument("--charge")
    p.add_argument("--rows", help="inverse map: tableau rows like 1.3.4/2.3.4/2.4")
    p.add_argument("--v")

    p = add("multiplicity", "branching multiplicities m and M")
    p.add_argument("--charge")
    p.add_argument("--nu", help='JSON weight, e.g. {"fundamental": {"0": 1, "5": 1}}')
    p.add_argument("--which", choices=("m", "M"), default="m")

    p = add("verify", "exhaustive conformance suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--l", type=int)
    p.add_argument("--max-rank", type=int)
    p.add_argument("--charges", help='semicolon separated, e.g. "0,0;0,1"')
    return parser


def join_values(argv: Sequence[str]) -> list[str]:
    """Glue ``--flag value`` into ``--flag=value`` so values may start with '-'."""
    out, k = [], 0
    argv = list(argv)
    while k < len(argv):
        tok = argv[k]
        if tok in VALUE_FLAGS and k + 1 < len(argv):
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def run(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(join_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.e is not None:
            args.e = parse_e(args.e)
        elif args.verb == "verify":
            args.e = 2
        if args.jobs < 1:
            raise FockError("--jobs must be >= 1")
        COMMANDS[args.verb](args)
    except _VerifyFailed:
        return 1
    except FockError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
