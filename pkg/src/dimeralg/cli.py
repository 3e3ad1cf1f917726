"""Command-line front end.

Subcommands: validate, matchings, pairs, contract, find-contraction,
analyze.  Exit codes: 0 success, 1 failure (invalid input quiver),
2 computation caveats, 64 usage error, 66 missing file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import centers, contraction as contraction_mod, matchings as matchings_mod
from . import paths as path_calculus
from .centers import CenterBounds, depiction_report
from .fixtures import parse_letters, seed_fixtures
from .grading import display_sorted
from .quiver import QuiverFormatError, parse_quiver, validate

EX_OK = 0
EX_FAIL = 1
EX_CAVEAT = 2
EX_USAGE = 64
EX_NOINPUT = 66


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EX_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="dimeralg",
                     description="dimer quivers on the two-torus: matchings, "
                                 "contractions, and center geometry")
    parser.add_argument("--seed-fixtures", metavar="DIR",
                        help="write the built-in quiver corpus to DIR and exit")
    sub = parser.add_subparsers(dest="command")

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("file", help="quiver file")
        p.add_argument("--json", action="store_true", dest="as_json",
                       help="machine-readable output")
        return p

    add("validate", help="check the dimer-quiver invariants")
    add("matchings", help="perfect and simple matchings")
    p = add("pairs", help="bounded search for non-cancellative path pairs")
    p.add_argument("--bound", type=int, default=8, help="path length bound")
    p = add("contract", help="contract a set of arrows")
    p.add_argument("--arrows", required=True,
                   help="comma separated arrow ids (empty for identity)")
    add("find-contraction", help="search for a cyclic contraction")
    p = add("analyze", help="full center-geometry report")
    p.add_argument("--contract", default="auto", dest="contract_spec",
                   help="'auto' or comma separated arrow ids")
    p.add_argument("--letters", action="store_true",
                   help="rename variables via the fixture's .letters file")
    p.add_argument("--window", type=int, default=CenterBounds.window)
    p.add_argument("--degree-cap", type=int, default=CenterBounds.degree_cap)
    return parser


def _load(path: str):
    if not os.path.exists(path):
        print(f"error: no such file: {path}", file=sys.stderr)
        raise SystemExit(EX_NOINPUT)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_quiver(text)
    except QuiverFormatError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(EX_FAIL)


def _emit_json(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _names_for(path: str, report_nvars: int):
    lpath = os.path.splitext(path)[0] + ".letters"
    if not os.path.exists(lpath):
        print(f"error: no letters file next to {path}", file=sys.stderr)
        raise SystemExit(EX_NOINPUT)
    with open(lpath, encoding="utf-8") as fh:
        _, names = parse_letters(fh.read())
    if sorted(names) != list(range(report_nvars)):
        print("error: letters file does not match the matching family",
              file=sys.stderr)
        raise SystemExit(EX_FAIL)
    return tuple(names[i] for i in range(report_nvars))


def cmd_validate(args) -> int:
    q = _load(args.file)
    report = validate(q)
    if args.as_json:
        _emit_json({"schema": "dimeralg-validate/1",
                    "valid": report.valid,
                    "checks": [{"name": c.name, "passed": c.passed,
                                "detail": c.detail} for c in report.checks]})
    else:
        for c in report.checks:
            mark = "ok" if c.passed else "FAIL"
            detail = f"  ({c.detail})" if c.detail else ""
            print(f"{mark:>4}  {c.name}{detail}")
        print("OK" if report.valid else "INVALID")
    return EX_OK if report.valid else EX_FAIL


def cmd_matchings(args) -> int:
    q = _load(args.file)
    perfect = matchings_mod.perfect_matchings(q)
    simple = matchings_mod.simple_matchings(q)
    uncovered = sorted(matchings_mod.uncovered_arrows(q))
    if args.as_json:
        _emit_json({"schema": "dimeralg-matchings/1",
                    "perfect": [sorted(m.arrows) for m in perfect],
                    "simple": [sorted(m.arrows) for m in simple],
                    "uncovered": uncovered,
                    "cancellative": not uncovered})
    else:
        print(f"perfect matchings: {len(perfect)}")
        for m in perfect:
            print("  ", sorted(m.arrows))
        print(f"simple matchings: {len(simple)}")
        for m in simple:
            print("  ", sorted(m.arrows))
        print("uncovered arrows:", uncovered)
        print("cancellative:", not uncovered)
    return EX_OK


def cmd_pairs(args) -> int:
    q = _load(args.file)
    pair = path_calculus.find_noncancellative_pair(q, args.bound)
    if args.as_json:
        data = {"schema": "dimeralg-pairs/1", "bound": args.bound, "pair": None}
        if pair is not None:
            data["pair"] = {
                "base": pair.p.base,
                "p": list(pair.p.arrows),
                "q": list(pair.q.arrows),
                "witness": list(pair.witness.arrows) if pair.witness else None,
                "witness_side": pair.witness_side,
            }
        _emit_json(data)
    elif pair is None:
        print(f"no non-cancellative pair found up to length {args.bound}")
    else:
        print(f"pair at vertex {pair.p.base}:")
        print("  p =", list(pair.p.arrows))
        print("  q =", list(pair.q.arrows))
        if pair.witness is not None:
            print(f"  witness ({pair.witness_side}):", list(pair.witness.arrows))
    return EX_OK


def _parse_arrow_list(spec: str):
    spec = spec.strip()
    if not spec:
        return ()
    return tuple(int(tok) for tok in spec.split(","))


def cmd_contract(args) -> int:
    q = _load(args.file)
    try:
        arrows = _parse_arrow_list(args.arrows)
    except ValueError:
        print("error: --arrows expects comma separated integers", file=sys.stderr)
        return EX_USAGE
    try:
        c = contraction_mod.contract(q, arrows)
    except contraction_mod.ContractionError as exc:
        print(f"contraction failed: {exc}", file=sys.stderr)
        return EX_FAIL
    if args.as_json:
        _emit_json({"schema": "dimeralg-contract/1",
                    "contracted": sorted(c.contracted),
                    "vertex_map": list(c.vertex_map),
                    "arrow_map": {str(k): v for k, v in sorted(c.arrow_map.items())},
                    "target": c.target.to_text()})
    else:
        print(c.target.to_text(header="contraction target"), end="")
        print("# vertex map (source -> target)")
        for v, w in enumerate(c.vertex_map):
            print(f"#   {v} -> {w}")
    return EX_OK


def cmd_find_contraction(args) -> int:
    q = _load(args.file)
    try:
        c = contraction_mod.find_cyclic_contraction(q)
    except contraction_mod.SearchSpaceExceededError as exc:
        print(f"search not attempted: {exc}", file=sys.stderr)
        return EX_CAVEAT
    except centers.SaturationFailure as exc:
        print(f"search inconclusive: {exc}", file=sys.stderr)
        return EX_CAVEAT
    if args.as_json:
        _emit_json({"schema": "dimeralg-find-contraction/1",
                    "found": c is not None,
                    "arrows": sorted(c.contracted) if c is not None else None})
    elif c is None:
        print("no contraction to a cancellative dimer algebra exists")
    elif c.is_identity():
        print("identity contraction (the quiver is already cancellative)")
    else:
        print("cyclic contraction found: arrows", sorted(c.contracted))
    return EX_OK


def cmd_analyze(args) -> int:
    q = _load(args.file)
    report_q = validate(q)
    if not report_q.valid:
        for c in report_q.failures():
            print(f"invalid quiver: {c.name}: {c.detail}", file=sys.stderr)
        return EX_FAIL
    bounds = CenterBounds(window=args.window, degree_cap=args.degree_cap)
    contraction = None
    if args.contract_spec != "auto":
        try:
            arrows = _parse_arrow_list(args.contract_spec)
        except ValueError:
            print("error: --contract expects 'auto' or comma separated ids",
                  file=sys.stderr)
            return EX_USAGE
        try:
            contraction = contraction_mod.contract(q, arrows)
        except contraction_mod.ContractionError as exc:
            print(f"contraction failed: {exc}", file=sys.stderr)
            return EX_FAIL
    report = depiction_report(q, contraction, bounds)
    if args.letters:
        family = len(report.S_generators[0].exps) if report.S_generators else 0
        report.names = _names_for(args.file, family)
    if args.as_json:
        _emit_json(report.to_dict())
    else:
        _print_report(report)
    return EX_CAVEAT if report.caveats else EX_OK


def _print_report(r: centers.CenterReport) -> None:
    print(f"quiver: V={r.num_vertices} E={r.num_arrows} F={r.num_faces}")
    print(f"cancellative: {r.cancellative}"
          + (f"  (uncovered arrows: {list(r.uncovered)})" if r.uncovered else ""))
    if r.contracted is None:
        print("contraction: none available")
    elif not r.contracted:
        print("contraction: identity")
    else:
        print(f"contraction ({r.contraction_mode}): arrows {list(r.contracted)}")
    print(f"S = {r.describe_S()}")
    if r.dimension is not None:
        print(f"dim S = {r.dimension}")
    print(f"R = {r.describe_R()}")
    if r.r_equals_s is not None:
        print(f"R equals S: {r.r_equals_s}")
    if r.normal is not None:
        print(f"R normal: {r.normal}")
    if r.R is not None:
        if r.zhat_equals_r is None:
            verdict = "undetermined (see caveats)"
        elif r.zhat_equals_r:
            verdict = "yes (to the degree cap)"
        else:
            verdict = f"no (certificate {r.fmt(r.nonliftable)})"
        print(f"reduced center equals R: {verdict}")
    if r.m0_ideal_gens is not None:
        gens = ", ".join(r.fmt(g) for g in display_sorted(r.m0_ideal_gens, r.names))
        print(f"m0 S-ideal: ({gens})")
    if r.lifts:
        shown = ", ".join(f"{r.fmt(g)}: {status}" for g, status in r.lifts)
        print(f"central lifts of R generators: {shown}")
    if r.witness is not None:
        w = r.witness
        chain = " < ".join("(" + ", ".join(r.fmt(g) for g in step) + ")"
                           for step in w.chain)
        print(f"nonnoetherian witness: s = {r.fmt(w.s)}, N = {w.N}")
        print(f"  ascending chain: {chain}")
    for c in r.caveats:
        print(f"caveat: {c}")
    for n in r.notes:
        print(f"note: {n}")


_COMMANDS = {
    "validate": cmd_validate,
    "matchings": cmd_matchings,
    "pairs": cmd_pairs,
    "contract": cmd_contract,
    "find-contraction": cmd_find_contraction,
    "analyze": cmd_analyze,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    if args.seed_fixtures:
        written = seed_fixtures(args.seed_fixtures)
        for path in written:
            print(path)
        return EX_OK
    if not args.command:
        parser.print_usage(sys.stderr)
        return EX_USAGE
    try:
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_FAIL


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
