"""Command-line front end.

    omega3rb bracket 0 1 2
    omega3rb check --case FIN-3 --params f0=0,f1=-1 --window 10
    omega3rb identities --suite det-criterion --window 12
    omega3rb search --window 5 --values 0,-1 --margin 2 --strict
    omega3rb catalog list

Exit codes: 0 pass, 1 residual failure, 2 usage/validation, 3 budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from . import catalog, suites
from .algebra import L, bracket, format_scalar, parse_scalar
from .coeff import window
from .operator import HomOp, InvalidWeight, check_k_collapse, sweep
from .report import envelope
from .search import BudgetExceeded, DEFAULT_BUDGET, SearchSpace, completeness_report, default_workers

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    radius: Optional[int] = None
    k: int = 0
    weight: str = "1"
    case: Optional[str] = None
    params_path: Optional[str] = None
    values: List[str] = field(default_factory=list)
    seed: Optional[int] = None
    workers: Optional[int] = None
    output: Optional[str] = None

    def to_json(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None and v != []}


def _rational(text: str) -> str:
    try:
        return format_scalar(parse_scalar(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _value_list(text: str) -> List[str]:
    return [_rational(v) for v in text.split(",") if v.strip()]


def _radius(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("window radius must be >= 0")
    return n


def _emit(doc: dict, output: Optional[str]) -> None:
    text = json.dumps(doc, indent=2)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _family_from_args(args) -> catalog.Family:
    params = {}
    case, reading = args.case, args.reading
    if args.params_file:
        doc_case, doc_reading, params = catalog.load_params_document(args.params_file)
        case = case or doc_case
        reading = reading or doc_reading
    if args.params:
        params.update(catalog.parse_params(args.params))
    if not case:
        raise UsageError("a case id is required (--case or the parameter document)")
    return catalog.build_family(case, params, reading or "literal")


# -- subcommands -------------------------------------------------------------------

def cmd_bracket(args) -> int:
    print(bracket(L(args.l), L(args.m), L(args.n)))
    return EXIT_PASS


def cmd_check(args) -> int:
    fam = _family_from_args(args)
    cfg = RunConfig("check", args.window, args.k, args.weight, fam.case_id, args.params_file)
    R = HomOp(args.k, fam)
    w = window(args.window)
    if args.k == 0:
        rep = sweep(R, parse_scalar(args.weight), w)
        body, ok = rep.to_json(), rep.passed
    else:
        if parse_scalar(args.weight) != 1:
            raise UsageError("k != 0 checks are defined for weight 1 only")
        kc = check_k_collapse(R, w)
        body, ok = kc.to_json(), kc.passed
    body["family"] = fam.to_json()
    _emit(envelope("check", cfg.to_json(), body), args.output)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_identities(args) -> int:
    family = None
    if args.suite in ("derived-a-branch", "derived-01-branch"):
        family = _family_from_args(args)
    cfg = RunConfig("identities", args.window, seed=args.seed, case=args.case, params_path=args.params_file)
    body = suites.run(args.suite, args.window, args.trials, args.seed, family)
    if family is not None:
        body["family"] = family.to_json()
    _emit(envelope("identities", {**cfg.to_json(), "suite": args.suite, "trials": args.trials}, body), args.output)
    return EXIT_PASS if body["passed"] else EXIT_FAIL


def cmd_search(args) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    cfg = RunConfig("search", args.window, args.k, args.weight, values=args.values,
                    workers=workers, output=args.output)
    space = SearchSpace(args.window, args.values, args.k, args.weight, args.budget)
    rep = completeness_report(space, args.margin, workers)
    body = rep.to_json()
    _emit(envelope("search", {**cfg.to_json(), "margin": args.margin, "strict": args.strict}, body), args.output)
    if args.strict and rep.unexplained:
        return EXIT_FAIL
    if args.k != 0 and rep.nonzero_on_reachable():
        return EXIT_FAIL
    return EXIT_PASS


def cmd_catalog(args) -> int:
    rows = catalog.enumerate_cases()
    if args.json:
        _emit(envelope("catalog", {"subcommand": "catalog list"},
                       {"cases": [{"id": cid, **dom} for cid, dom in rows]}), None)
        return EXIT_PASS
    for cid, dom in rows:
        params = ",".join(dom["int_params"] + dom["scalar_params"]) or "-"
        readings = ",".join(dom["readings"])
        print(f"{cid:9s} {params:24s} {readings:24s} {dom['summary']}")
    return EXIT_PASS


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omega3rb", description="Exact checks of homogeneous Rota-Baxter operators on A_omega.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bracket", help="evaluate [L_l, L_m, L_n]")
    for name in ("l", "m", "n"):
        b.add_argument(name, type=int)
    b.set_defaults(func=cmd_bracket)

    def family_args(sp):
        sp.add_argument("--case")
        sp.add_argument("--params", help="comma list, e.g. a=1/2,m0=1")
        sp.add_argument("--params-file", help="INI document with a [family] section")
        sp.add_argument("--reading", default=None, help="literal (default), mirror or amended")

    c = sub.add_parser("check", help="sweep the RB identity over a window for one catalog family")
    family_args(c)
    c.add_argument("--window", type=_radius, default=12)
    c.add_argument("--k", type=int, default=0)
    c.add_argument("--weight", type=_rational, default="1")
    c.add_argument("--output")
    c.set_defaults(func=cmd_check)

    i = sub.add_parser("identities", help="run a named identity suite")
    i.add_argument("--suite", required=True, help=" | ".join(suites.SUITES))
    family_args(i)
    i.add_argument("--window", type=_radius, default=8)
    i.add_argument("--trials", type=int, default=1000)
    i.add_argument("--seed", type=int, default=0)
    i.add_argument("--output")
    i.set_defaults(func=cmd_identities)

    s = sub.add_parser("search", help="enumerate window solutions and explain them against the catalog")
    s.add_argument("--window", type=_radius, required=True)
    s.add_argument("--values", type=_value_list, default=["0", "-1"])
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--weight", type=_rational, default="1")
    s.add_argument("--margin", type=int, default=2)
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--strict", action="store_true", help="exit 1 when any solution is unexplained")
    s.add_argument("--output")
    s.set_defaults(func=cmd_search)

    g = sub.add_parser("catalog", help="catalog queries")
    gsub = g.add_subparsers(dest="action", required=True)
    gl = gsub.add_parser("list")
    gl.add_argument("--json", action="store_true")
    gl.set_defaults(func=cmd_catalog)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"omega3rb: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, catalog.ValidationError, InvalidWeight, ValueError) as exc:
        print(f"omega3rb: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
