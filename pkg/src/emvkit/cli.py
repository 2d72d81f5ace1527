"""``emvkit`` command line.

Exit codes: 0 pass, 1 law failure, 2 usage or parse error, 3 no square
root, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .algebra import Budget
from .errors import (EMVError, ElementError, HasTopError, InvariantBreach, ParseError,
                     SquareRootError, TagMismatch)
from .grammar import parse_descriptor
from .laws import CATALOG, run_catalog, summary
from .represent import describe_root, extend_sqrt, represent_top
from .sqrt import (classify, decompose, is_strict, sample, sqrt_build, verify_root,
                   witness_for_element)

EXIT_OK, EXIT_LAW, EXIT_USAGE, EXIT_NONE, EXIT_BREACH = 0, 1, 2, 3, 4


class Outcome(Exception):
    """Early exit carrying a status code, a message line and a record."""

    def __init__(self, code, line, record=None):
        super().__init__(line)
        self.code, self.line, self.record = code, line, record or {}


def _budget(args) -> Budget:
    return Budget(max_denom_exp=args.max_denom_exp, max_set=args.max_set, lex_bound=args.lex_bound,
                  max_support=args.max_support, samples=args.budget)


def _seed(args) -> int:
    env = os.environ.get("EMVKIT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise Outcome(EXIT_USAGE, f"error: EMVKIT_SEED must be an integer, got {env!r}")
    return args.seed


def _algebra(args):
    return parse_descriptor(args.algebra)


def _element(M, text):
    try:
        return M.parse(text)
    except ParseError:
        raise
    except ElementError as exc:
        raise ParseError(str(exc), text, 0) from None


def _root_or_exit(M, budget, x=None):
    v = sqrt_build(M, budget)
    if not v.exists:
        w = witness_for_element(M, x) if x is not None else None
        w = w or v.witness
        raise Outcome(EXIT_NONE, f"no square root: {w}",
                      {"algebra": str(M), "exists": False, "witness": str(w)})
    check = verify_root(M, v.root, budget, points=sample(M.elements(budget), 128, random.Random(0)),
                        pairs=1024)
    if not check.ok:
        raise InvariantBreach(f"built square root fails its own check on {M}: {check}")
    return v.root


def cmd_sqrt(args, budget):
    M = _algebra(args)
    x = _element(M, args.x) if args.x is not None else None
    r = _root_or_exit(M, budget, x)
    strict = is_strict(M, r, budget)
    form = r.form
    rec = {"algebra": str(M), "exists": True, "form": form, "strict": strict}
    lines = []
    if args.table:
        table = [(M.fmt(y), M.fmt(r(y))) for y in M.elements(budget)]
        rec["table"] = [list(p) for p in table]
        lines.extend(f"{a} -> {b}" for a, b in table)
    tail = f"form={form}, strict={str(strict).lower()}"
    if x is not None:
        rec["x"], rec["value"] = M.fmt(x), M.fmt(r(x))
        lines.append(f"{M.fmt(r(x))}, {tail}")
    else:
        lines.append(f"exists, {tail}")
    return EXIT_OK, lines, rec


def cmd_classify(args, budget):
    M = _algebra(args)
    r = _root_or_exit(M, budget)
    c = classify(M, r, budget)
    rec = {"algebra": str(M), "tag": c.tag}
    if c.tag == "product":
        rec.update(boolean=str(c.boolean), strict=str(c.strict), w=M.fmt(c.w))
        line = f"product: boolean={c.boolean}, strict={c.strict}, w={M.fmt(c.w)}"
    else:
        line = c.tag
    return EXIT_OK, [line], rec


def cmd_decompose(args, budget):
    M = _algebra(args)
    r = _root_or_exit(M, budget)
    dec = decompose(M, r, budget)
    fails = dec.verify(budget)
    rec = {"algebra": str(M), "t": M.fmt(dec.t), "e": M.fmt(dec.e), "verified": not fails}
    c = classify(M, r, budget, verify=False)
    lines = [f"t={M.fmt(dec.t)}, e={M.fmt(dec.e)}",
             f"boolean part: {c.boolean}", f"strict part: {c.strict}"]
    if args.x is not None:
        x = _element(M, args.x)
        p = dec.phi(x)
        rec["phi"] = [M.fmt(p[0]), M.fmt(p[1])]
        lines.append(f"phi({M.fmt(x)}) = ({M.fmt(p[0])}, {M.fmt(p[1])})")
    if fails:
        raise InvariantBreach(f"splitting map fails on {M}: {fails[:3]}")
    lines.append("phi: bijective homomorphism on the enumeration")
    return EXIT_OK, lines, rec


def cmd_represent(args, budget):
    M = _algebra(args)
    try:
        N = represent_top(M)
    except HasTopError as exc:
        raise Outcome(EXIT_USAGE, f"error: {exc}")
    v = sqrt_build(M, budget)
    if v.exists:
        R = extend_sqrt(M, v.root, budget)
        form = describe_root(N, R)
    else:
        form = "none"
    rec = {"algebra": str(M), "representation": N.describe(), "top": N.fmt(N.top), "R": form}
    return EXIT_OK, [f"{N.describe()}; R={form}", f"top={N.fmt(N.top)}"], rec


def cmd_check(args, budget, seed):
    M = _algebra(args)
    suites = None
    if args.suite:
        unknown = [s for s in args.suite if s not in CATALOG]
        if unknown:
            raise Outcome(EXIT_USAGE, f"error: unknown suite {unknown[0]!r}")
        suites = args.suite
    v = sqrt_build(M, budget)
    reports = run_catalog(M, v.root if v.exists else None, budget, seed, suites)
    counts = summary(reports)
    code = EXIT_LAW if counts["fail"] else EXIT_OK
    if args.format == "json":
        return code, None, {"algebra": str(M), "seed": seed, "reports": [r.record() for r in reports],
                            "summary": counts}
    lines = [r.to_json() for r in reports]
    lines.append(json.dumps({"summary": counts}, sort_keys=True))
    return code, lines, None


def cmd_parse(args, budget):
    M = _algebra(args)
    rec = {"algebra": str(M)}
    lines = [str(M)]
    if args.x is not None:
        x = _element(M, args.x)
        rec["element"] = M.fmt(x)
        lines.append(M.fmt(x))
    return EXIT_OK, lines, rec


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-denom-exp", type=int, default=6, metavar="E")
    common.add_argument("--max-set", type=int, default=8, metavar="N")
    common.add_argument("--lex-bound", type=int, default=64, metavar="L")
    common.add_argument("--max-support", type=int, default=3, metavar="S")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=10_000, help="sampled tuples per suite")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="emvkit", description="Square roots on MV- and EMV-algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("sqrt", parents=[common], help="build the square root")
    s.add_argument("algebra")
    s.add_argument("-x", help="element literal to evaluate")
    s.add_argument("--table", action="store_true", help="print r on the whole enumeration")
    s = sub.add_parser("classify", parents=[common], help="Boolean / strict / product")
    s.add_argument("algebra")
    s = sub.add_parser("decompose", parents=[common], help="split into Boolean x strict")
    s.add_argument("algebra")
    s.add_argument("-x")
    s = sub.add_parser("represent", parents=[common], help="adjoin a top to a proper algebra")
    s.add_argument("algebra")
    s = sub.add_parser("check", parents=[common], help="run law suites")
    s.add_argument("algebra")
    s.add_argument("--suite", action="append", help="suite id (repeatable)")
    s = sub.add_parser("parse", parents=[common], help="echo canonical forms")
    s.add_argument("algebra")
    s.add_argument("-x")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        budget, seed = _budget(args), _seed(args)
        if args.command == "check":
            code, lines, rec = cmd_check(args, budget, seed)
        else:
            handler = {"sqrt": cmd_sqrt, "classify": cmd_classify, "decompose": cmd_decompose,
                       "represent": cmd_represent, "parse": cmd_parse}[args.command]
            code, lines, rec = handler(args, budget)
    except Outcome as out:
        code, lines, rec = out.code, [out.line], dict(out.record, error=out.line)
    except ParseError as exc:
        code, lines, rec = EXIT_USAGE, [f"parse error: {exc}"], {"error": str(exc), "offset": exc.byte_offset}
    except TagMismatch as exc:
        code, lines, rec = EXIT_USAGE, [f"error: {exc}"], {"error": str(exc)}
    except (InvariantBreach, SquareRootError) as exc:
        code, lines, rec = EXIT_BREACH, [f"invariant breach: {exc}"], {"error": str(exc)}
    except EMVError as exc:
        code, lines, rec = EXIT_USAGE, [f"error: {exc}"], {"error": str(exc)}
    out = sys.stdout if code in (EXIT_OK, EXIT_LAW, EXIT_NONE) else sys.stderr
    if args.format == "json" and rec is not None:
        print(json.dumps(dict(rec, exit=code), sort_keys=True), file=out)
    else:
        for line in lines or ():
            print(line, file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
