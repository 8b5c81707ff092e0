"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a counterexample,
2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence

from .eg import eg_coefficients, eg_statistic, enumerate_eg
from .perm import (
    coxeter_length,
    enumerate_length_n,
    involutions,
    is_totally_commutative,
    make_perm,
    make_word,
    perm_from_word,
    reduced_words,
    support,
)
from .tableaux import hook_count, make_partition
from .verify import Caps, SuiteError, all_passed, run_suite


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip().strip("[]()")
    if not text:
        return []
    try:
        return [int(v) for v in text.replace(" ", ",").split(",") if v]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _perm_arg(args) -> tuple[int, ...]:
    if args.perm is not None and args.word is not None:
        raise UsageError("give either --perm or --word, not both")
    if args.perm is None and args.word is None:
        raise UsageError("a permutation is required (--perm or --word)")
    try:
        if args.word is not None:
            return perm_from_word(make_word(_int_list(args.word)))
        return make_perm(_int_list(args.perm))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _caps(args) -> Caps:
    caps = Caps.from_env()
    if getattr(args, "cap", None) is not None:
        caps = Caps(length=args.cap, size=max(caps.size, args.cap + 3))
    return caps


def _shape_str(shape) -> str:
    return "(" + ",".join(map(str, shape)) + ")"


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_compute(args) -> tuple[str, int]:
    w = _perm_arg(args)
    coeffs = eg_coefficients(w)
    table = [{"shape": list(s), "a": a, "f": hook_count(s)} for s, a in coeffs.items()]
    data = {
        "perm": list(w),
        "length": coxeter_length(w),
        "support": sorted(support(w)),
        "totally_commutative": is_totally_commutative(w),
        "eg": sum(coeffs.values()),
        "inv": involutions(coxeter_length(w)),
        "coefficients": table,
    }
    if args.format == "json":
        return json.dumps(data, indent=2), 0
    if args.format == "csv":
        return _csv([["shape", "a", "f"]] + [[" ".join(map(str, r["shape"])), r["a"], r["f"]] for r in table]), 0
    lines = [
        f"perm: {data['perm']}",
        f"length: {data['length']}",
        f"support: {data['support']}",
        f"totally_commutative: {str(data['totally_commutative']).lower()}",
        f"EG: {data['eg']}  (inv({data['length']}) = {data['inv']})",
        f"{'shape':<16}{'a':>6}{'f':>6}",
    ]
    lines += [f"{_shape_str(r['shape']):<16}{r['a']:>6}{r['f']:>6}" for r in table]
    return "\n".join(lines), 0


def cmd_tableaux(args) -> tuple[str, int]:
    w = _perm_arg(args)
    try:
        shape = make_partition(_int_list(args.shape))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    tabs = enumerate_eg(shape, w)
    if args.format == "json":
        data = {"shape": list(shape), "perm": list(w), "count": len(tabs), "tableaux": [t.to_dict() for t in tabs]}
        return json.dumps(data, indent=2), 0
    if args.format == "csv":
        rows = [["index", "rows", "reading_word"]]
        rows += [[k, str(t), " ".join(map(str, t.reading_word))] for k, t in enumerate(tabs, 1)]
        return _csv(rows), 0
    lines = [f"shape {_shape_str(shape)}, perm {list(w)}: {len(tabs)} EG tableaux"]
    lines += [f"  {t}  reading word {list(t.reading_word)}" for t in tabs]
    return "\n".join(lines), 0


def cmd_reduced_words(args) -> tuple[str, int]:
    w = _perm_arg(args)
    words = reduced_words(w)
    if args.format == "json":
        return json.dumps({"perm": list(w), "count": len(words), "words": [list(x) for x in words]}, indent=2), 0
    if args.format == "csv":
        return _csv([["word"]] + [[" ".join(map(str, x))] for x in words]), 0
    return "\n".join([f"perm {list(w)}: {len(words)} reduced words"] + [f"  {list(x)}" for x in words]), 0


def cmd_maximizers(args) -> tuple[str, int]:
    n = args.length
    if n < 1:
        raise UsageError("--length must be positive")
    try:
        _caps(args).check_length(n)
    except SuiteError as exc:
        raise UsageError(str(exc)) from None
    target = involutions(n)
    candidates = enumerate_length_n(n)
    stats = {w: eg_statistic(w) for w in candidates}
    winners = sorted(w for w, v in stats.items() if v == target)
    tc = sorted(w for w in candidates if is_totally_commutative(w))
    match = winners == tc and max(stats.values()) == target
    data = {
        "n": n,
        "inv": target,
        "max": max(stats.values()),
        "candidates": len(candidates),
        "maximizers": [list(w) for w in winners],
        "matches_totally_commutative": match,
    }
    if args.format == "json":
        return json.dumps(data, indent=2), 0 if match else 1
    if args.format == "csv":
        return _csv([["perm", "eg"]] + [[" ".join(map(str, w)), stats[w]] for w in winners]), 0 if match else 1
    lines = [
        f"n = {n}: inv(n) = {target}, max EG = {data['max']} over {len(candidates)} canonical permutations",
        f"maximizers ({len(winners)}):",
    ]
    lines += [f"  {list(w)}" for w in winners]
    lines.append(f"maximizers are exactly the totally commutative ones: {str(match).lower()}")
    return "\n".join(lines), 0 if match else 1


def cmd_verify(args) -> tuple[str, int]:
    try:
        reports = run_suite(args.suite, max_length=args.max_length, size_max=args.size_max, caps=_caps(args))
    except SuiteError as exc:
        raise UsageError(str(exc)) from None
    ok = all_passed(reports)
    code = 0 if ok else 1
    if args.format == "json":
        return json.dumps({"passed": ok, "reports": [r.to_dict() for r in reports]}, indent=2), code
    if args.format == "csv":
        rows = [["suite", "parameters", "checked", "passed", "counterexamples", "wall_time"]]
        rows += [
            [r.suite_name, json.dumps(r.parameters), r.checked_count, r.passed, len(r.counterexamples), f"{r.wall_time:.3f}"]
            for r in reports
        ]
        return _csv(rows), code
    lines = [f"{'suite':<20}{'params':<40}{'checked':>9}  {'result':<6}{'time':>9}"]
    for r in reports:
        params = ", ".join(
            f"{k}={_shape_str(v) if isinstance(v, list) else v}"
            for k, v in r.parameters.items()
            if not isinstance(v, dict) and not (isinstance(v, list) and any(isinstance(e, list) for e in v))
        )
        lines.append(
            f"{r.suite_name:<20}{params:<40}{r.checked_count:>9}  {'PASS' if r.passed else 'FAIL':<6}{r.wall_time:>8.2f}s"
        )
        for ce in r.counterexamples[:5]:
            lines.append(f"    {json.dumps(ce)}")
    lines.append("all suites passed" if ok else "FAILURES found")
    return "\n".join(lines), code


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "json", "csv"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="egstat", description="Edelman-Greene statistic toolkit")
    # separate action: parents share action objects, so a default set here would leak into subcommands
    parser.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    def perm_opts(p):
        p.add_argument("--perm", help="one-line notation, comma separated (identity: '')")
        p.add_argument("--word", help="letters of a word, comma separated")

    p = sub.add_parser("compute", parents=[fmt], help="EG(w) and the table of a_{w,shape}")
    perm_opts(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("tableaux", parents=[fmt], help="list EG tableaux of a given shape")
    p.add_argument("--shape", required=True, help="partition, comma separated")
    perm_opts(p)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("reduced-words", parents=[fmt], help="list Red(w)")
    perm_opts(p)
    p.set_defaults(func=cmd_reduced_words)

    p = sub.add_parser("maximizers", parents=[fmt], help="permutations of length n attaining inv(n)")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--cap", type=int, help="raise the length cap (opt in to n = 6)")
    p.set_defaults(func=cmd_maximizers)

    p = sub.add_parser("verify", parents=[fmt], help="run verification suites")
    p.add_argument("--suite", default="all", help="comma-separated suite names or 'all'")
    p.add_argument("--max-length", "--length", dest="max_length", type=int)
    p.add_argument("--size-max", type=int)
    p.add_argument("--cap", type=int, help="raise the length cap (opt in to n = 6)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"egstat {args.command}: error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
