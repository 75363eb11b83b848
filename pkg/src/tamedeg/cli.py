"""Command-line interface.

Exit codes: 0 success (or a positive answer), 1 a negative answer, 2 usage
or domain errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional, Sequence

from . import semigroup, tables
from .construct import (
    KnownNonMember,
    Member,
    NonMember,
    NonMemberTrace,
    decide,
    realize_with_representation,
    verdict_to_json,
)
from .poly import MINUS_INF, PolyMap, format_polynomial
from .reduction import elementary_search
from .tame import TameWord, expand, random_word, verify

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload, text_lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def _tuple_text(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _trace_lines(trace: NonMemberTrace) -> List[str]:
    out = [f"  {trace.sylvester}"]
    filt = trace.types_filter
    if not filt.even_degrees:
        out.append("  types I-IV: excluded (no even degree)")
    else:
        out.append(f"  types I-IV: {filt.conclusion} (d3 = 2*{filt.n})")
    for check in trace.elementary_checks:
        ok = all(r.holds for r in check.relations)
        out.append(f"  F{check.coordinate}: {check.note} "
                   f"[{len(check.relations)} relations, {'all hold' if ok else 'FAILURE'}]")
    return out


def cmd_decide(args) -> int:
    raw = list(args.degrees)
    if any(d < 1 for d in raw):
        raise UsageError("degrees must be positive integers")
    degrees = sorted(raw)
    v = decide(*degrees)
    payload = verdict_to_json(v)
    payload["input"] = raw
    lines = []
    if raw != degrees:
        lines.append(f"input {_tuple_text(raw)} sorted to {_tuple_text(degrees)}")
    if isinstance(v, Member):
        rep = v.representation
        combo = " + ".join(f"{k}·{g}" for k, g in zip(rep.coefficients, rep.generators))
        lines.append(f"member: {degrees[v.index]} = {combo}")
        report = verify(v.witness)
        lines.append(f"witness mdeg = {_tuple_text(report.mdeg)}, "
                     f"inverse {'verified' if report.passed else 'FAILED'}")
        for i, c in enumerate(report.map.coords, 1):
            lines.append(f"  F{i} = {c}")
        code = EXIT_OK
    elif isinstance(v, NonMember):
        lines.append(f"nonmember: {degrees[2]} is not in {degrees[0]}N + {degrees[1]}N")
        lines.extend(_trace_lines(v.trace))
        code = EXIT_NO
    elif isinstance(v, KnownNonMember):
        lines.append(f"known nonmember: {v.citation}")
        if v.trace is not None:
            lines.append("independently confirmed by the two-prime trace:")
            lines.extend(_trace_lines(v.trace))
        code = EXIT_NO
    else:
        lines.append(f"out-of-scope: {v.reason}")
        code = EXIT_ERROR
    _emit(args, payload, lines)
    return code


def cmd_witness(args) -> int:
    degrees = list(args.degrees)
    if any(d < 1 for d in degrees):
        raise UsageError("degrees must be positive integers")
    if degrees != sorted(degrees):
        raise UsageError(f"degrees must be sorted ascending, got {_tuple_text(degrees)}")
    real = realize_with_representation(degrees)
    if real is None:
        msg = f"no degree in {_tuple_text(degrees)} is a natural combination of the smaller ones"
        if args.json:
            print(json.dumps({"witness": None, "reason": msg}, indent=2))
        else:
            print(f"no witness: {msg}")
        return EXIT_NO
    report = verify(real.word)
    word_json = real.word.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(word_json, fh, indent=2)
            fh.write("\n")
    summary = (f"mdeg = {_tuple_text(report.mdeg)}, "
               f"{'inverse verified' if report.passed else 'verification FAILED'}")
    lines = [summary]
    if args.out:
        lines.append(f"word written to {args.out}")
    else:
        lines.append(json.dumps(word_json))
    payload = {"witness": word_json, "index": real.index + 1,
               "representation": list(real.representation.coefficients),
               "verification": {"passed": report.passed, "mdeg": list(report.mdeg)}}
    _emit(args, payload, lines)
    return EXIT_OK if report.passed else EXIT_NO


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _load_map(path: str) -> PolyMap:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    if "factors" in data:
        return expand(TameWord.from_json(data))
    if "coords" in data:
        return PolyMap.from_json(data)
    raise ValueError("file is neither a tame word nor a polynomial map")


def cmd_verify(args) -> int:
    word = TameWord.from_json(_load_json(args.wordfile))
    report = verify(word)
    lines = [
        f"{'pass' if report.passed else 'FAIL'}: mdeg = {_tuple_text(report.mdeg)}",
        f"  inverse (left/right): {report.inverse_left}/{report.inverse_right}",
        f"  jacobian determinant: {report.jacobian}",
    ]
    _emit(args, report.to_json(), lines)
    return EXIT_OK if report.passed else EXIT_NO


def cmd_reduce(args) -> int:
    F = _load_map(args.mapfile)
    if F.n != 3:
        raise UsageError("reduce works on maps of C^3")
    if not 1 <= args.target <= 3:
        raise UsageError("target must be 1, 2 or 3")
    t = args.target - 1
    budget = args.budget if args.budget is not None else F[t].degree()
    if budget < F[t].degree():
        raise UsageError(f"budget {budget} is below deg F{args.target} = {F[t].degree()}")
    w = elementary_search(F, t, budget, minimize=args.minimize)
    if w is None:
        payload = {"target": args.target, "reduction": None, "budget": budget}
        _emit(args, payload, [f"none within budget {budget}"])
        return EXIT_NO
    a, b = w.others()
    nd = "-inf" if w.new_degree == MINUS_INF else w.new_degree
    lines = [
        f"g = {format_polynomial(w.g, ('u', 'v'))}   (u = F{a + 1}, v = F{b + 1})",
        f"deg F{args.target}: {w.old_degree} -> {nd}",
    ]
    _emit(args, w.to_json(), lines)
    return EXIT_OK


def _pair(args) -> semigroup.GeneratorPair:
    if args.a < 1 or args.b < 1:
        raise UsageError("generators must be positive")
    pair = semigroup.GeneratorPair(args.a, args.b)
    if not pair.coprime:
        raise UsageError(f"{args.a} and {args.b} are not coprime")
    return pair


def cmd_gaps(args) -> int:
    pair = _pair(args)
    values = list(semigroup.gaps(pair))
    if args.min is not None:
        values = [v for v in values if v >= args.min]
    _emit(args, values, [", ".join(map(str, values)) if values else "(none)"])
    return EXIT_OK


def cmd_frobenius(args) -> int:
    pair = _pair(args)
    try:
        value = semigroup.frobenius(pair)
    except semigroup.NoFrobeniusNumber as exc:
        raise UsageError(str(exc))
    _emit(args, {"pair": [pair.a, pair.b], "frobenius": value}, [str(value)])
    return EXIT_OK


def cmd_member(args) -> int:
    gens = list(args.generators)
    if any(g < 1 for g in gens):
        raise UsageError("generators must be positive")
    if args.target < 0:
        raise UsageError("target must be a natural number")
    rep = semigroup.member(gens, args.target)
    if rep is None:
        _emit(args, {"target": args.target, "generators": gens, "representation": None},
              [f"{args.target} is not representable"])
        return EXIT_NO
    _emit(args, {"target": args.target, "generators": gens,
                 "representation": list(rep.coefficients)}, [str(rep)])
    return EXIT_OK


def _parse_pair(text: str):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--pair expects A,B, got {text!r}")
    return a, b


def cmd_table(args) -> int:
    if (args.pair is None) == (args.three is None):
        raise UsageError("give exactly one of --pair A,B or --three P2")
    if args.three is not None:
        p2 = args.three
        if not semigroup.is_prime(p2) or p2 <= 3:
            raise UsageError(f"--three expects a prime greater than 3, got {p2}")
        diff = tables.three_diff(p2)
        lines = [f"(3, {p2}, d3) exceptions: " + ", ".join(map(str, diff.sieve))]
        payload = {"p1": 3, "p2": p2, "exceptions": list(diff.sieve)}
        if args.paper_diff:
            lines.append("closed form {2*p2 - 3k}: " + ", ".join(map(str, diff.formula)))
            lines.extend(diff.lines())
            payload["paper_diff"] = diff.to_json()
        _emit(args, payload, lines)
        return EXIT_OK
    a, b = _parse_pair(args.pair)
    if a < 2 or b < 2:
        raise UsageError("table generators must be at least 2")
    pair = semigroup.GeneratorPair(a, b)
    if not pair.coprime:
        raise UsageError(f"{a} and {b} are not coprime")
    if args.paper_diff and (pair.a, pair.b) not in tables.PUBLISHED:
        known = ", ".join(f"{p},{q}" for p, q in sorted(tables.PUBLISHED))
        raise UsageError(f"no published table for {pair.a},{pair.b} (known: {known})")
    derived = tables.exception_table(pair.a, pair.b)
    lines = [f"({pair.a}, {pair.b}, d3) exceptions: " + ", ".join(map(str, derived))]
    payload = {"pair": [pair.a, pair.b], "exceptions": derived}
    if args.paper_diff:
        diff = tables.paper_diff(pair.a, pair.b)
        lines.append("published: " + ", ".join(map(str, diff.published)))
        lines.extend(diff.lines())
        payload["paper_diff"] = diff.to_json()
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    if args.seed is None:
        raise UsageError("fuzz requires an explicit --seed")
    rng = random.Random(args.seed)
    failures = []
    for _ in range(args.count):
        word_seed = rng.randrange(2**32)
        k = rng.randint(0, args.factors)
        w = random_word(3, k, args.dmax, word_seed)
        if not verify(w).passed:
            failures.append(word_seed)
    payload = {"seed": args.seed, "count": args.count, "failed_word_seeds": failures}
    _emit(args, payload, [f"{args.count - len(failures)}/{args.count} random words verified"])
    return EXIT_OK if not failures else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized commands")

    parser = argparse.ArgumentParser(
        prog="tamedeg",
        description="Multidegrees of tame automorphisms of C^3: decisions, witnesses, tables.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="classify a degree triple")
    p.add_argument("degrees", type=int, nargs=3)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("witness", parents=[common], help="build a tame automorphism with given mdeg")
    p.add_argument("degrees", type=int, nargs="+")
    p.add_argument("--out", help="write the word JSON here")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="verify a tame word file")
    p.add_argument("wordfile")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", parents=[common], help="search for an elementary reduction")
    p.add_argument("mapfile", help="tame word or polynomial map JSON")
    p.add_argument("--target", type=int, required=True, help="coordinate to reduce (1-based)")
    p.add_argument("--budget", type=int, help="weighted degree budget (default: deg F_target)")
    p.add_argument("--minimize", action="store_true", help="find the least reachable degree")
    p.set_defaults(func=cmd_reduce)

    for name, func, helptext in (("gaps", cmd_gaps, "gaps of aN + bN"),
                                 ("frobenius", cmd_frobenius, "Frobenius number of aN + bN")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("a", type=int)
        p.add_argument("b", type=int)
        if name == "gaps":
            p.add_argument("--min", type=int, help="only gaps >= MIN")
        p.set_defaults(func=func)

    p = sub.add_parser("member", parents=[common], help="represent a target over generators")
    p.add_argument("generators", type=int, nargs="+")
    p.add_argument("--target", type=int, required=True)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("table", parents=[common], help="exception tables for (p1, p2, d3)")
    p.add_argument("--pair", help="A,B")
    p.add_argument("--three", type=int, metavar="P2", help="the (3, P2, d3) family")
    p.add_argument("--paper-diff", action="store_true", help="compare with the published lists")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("fuzz", parents=[common], help="verify seeded random tame words")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--factors", type=int, default=6, help="maximum factors per word")
    p.add_argument("--dmax", type=int, default=4, help="maximum addend degree")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.seed = getattr(args, "seed", None)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError, KeyError, TypeError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
