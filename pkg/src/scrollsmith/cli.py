"""scrollsmith command line.

Data goes to stdout and diagnostics to stderr.  Exit codes: 0 success,
1 usage or validation error, 2 crosscheck disagreement, 3 non-generic
resample exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from typing import Sequence

from . import __version__
from .criterion import CaseId, classify
from .crosscheck import crosscheck, crosscheck_box
from .enumerator import (
    SearchBounds,
    enumerate_by_chi,
    export_atlas,
    is_standard,
    realizability_sweep,
)
from .oracle import DEFAULT_PRIME, NonGeneric, oracle_smooth, x2_lines
from .polyalg import is_prime
from .scroll import InvalidParameters, ScrollParams, canonicalize, euler_characteristic, rationality_verdict

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_NONGENERIC = 0, 1, 2, 3
NONGENERIC_BUDGET = 0.001


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _prime(text: str) -> int:
    p = int(text)
    if p < 3 or p >= 2 ** 31 or not is_prime(p):
        raise argparse.ArgumentTypeError(f"{text} is not an odd prime below 2^31")
    return p


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def _nonnegative(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return n


def _glue_negative(argv: Sequence[str]) -> list[str]:
    # "--b -2,-1" would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for a in it:
        if a in ("--d", "--b"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=["human", "json"], default="human")

    tup = _Parser(add_help=False)
    tup.add_argument("--d", type=_int_list, required=True, metavar="D1,D2,D3,D4",
                     help="twisting degrees (four, or five including d5)")
    tup.add_argument("--b", type=_int_list, required=True, metavar="B1,B2")

    crit = _Parser(add_help=False)
    crit.add_argument("--strict-3j", action="store_true",
                      help="read case 3j as the printed conjunction")
    crit.add_argument("--literal-3kl", action="store_true",
                      help="keep the d3+d4+b1 >= 0 atom in cases 3k and 3l")

    rnd = _Parser(add_help=False)
    rnd.add_argument("--prime", type=_prime, default=DEFAULT_PRIME)
    rnd.add_argument("--seed", type=int, default=None,
                     help="RNG seed (falls back to $SCROLLSMITH_SEED, then 0)")

    ap = _Parser(prog="scrollsmith", description="Smooth pencils of fiberwise quadrics on 4-dimensional scrolls.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("classify", parents=[tup, crit, fmt], help="smoothness verdict and case")
    sub.add_parser("euler", parents=[tup, fmt], help="Euler characteristic")

    e = sub.add_parser("enumerate", parents=[crit], help="smooth families with given chi")
    e.add_argument("--chi", type=int, required=True)
    e.add_argument("--d1-max", type=_nonnegative, default=16)
    e.add_argument("--b-min", type=int, default=None)
    e.add_argument("--b-max", type=int, default=None)
    e.add_argument("--standard-only", action="store_true")
    e.add_argument("--format", choices=["human", "json", "csv"], default="human")

    c = sub.add_parser("cases", parents=[crit, fmt], help="list case ids, optionally with witnesses")
    c.add_argument("--realize", action="store_true", help="find the lex-least witness per case")
    c.add_argument("--d1-max", type=_nonnegative, default=12)

    v = sub.add_parser("verify", parents=[tup, rnd, fmt], help="sampling oracle verdict")
    v.add_argument("--trials", type=_positive, default=5)

    x = sub.add_parser("crosscheck", parents=[crit, rnd, fmt], help="criterion vs oracle sweep")
    x.add_argument("--d1-max", type=_nonnegative, default=4)
    x.add_argument("--b-min", type=int, default=None, help="default -2*d1_max")
    x.add_argument("--b-max", type=int, default=None, help="default d1_max")
    x.add_argument("--trials", type=_positive, default=5)

    sub.add_parser("x2-lines", parents=[rnd, fmt], help="lines through Y5 on the 2c family")
    return ap


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("SCROLLSMITH_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"SCROLLSMITH_SEED must be an integer, got {env!r}")


def _params(args) -> tuple[ScrollParams, str | None]:
    if len(args.b) != 2:
        raise UsageError(f"--b needs two values, got {len(args.b)}")
    if len(args.d) not in (4, 5):
        raise UsageError(f"--d needs four or five values, got {len(args.d)}")
    try:
        p = canonicalize(args.d, *args.b)
    except InvalidParameters as exc:
        raise UsageError(str(exc))
    raw = f"({','.join(map(str, args.d))}; {args.b[0]},{args.b[1]})"
    return p, (raw if raw != str(p) else None)


def _elem(c) -> str:
    if isinstance(c, tuple):
        a, b = c
        return f"{a}+{b}u" if b else str(a)
    return str(c)


def _point(v) -> str:
    return "(" + ":".join(_elem(c) for c in v) + ")"


def _emit(out, args, payload: dict, lines: list[str]):
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _header(p, raw) -> tuple[dict, list[str]]:
    info = {"params": p.as_dict(), "input": raw}
    line = f"params: {p}" if raw is None else f"params: {p} (canonicalized from {raw})"
    return info, [line]


def cmd_classify(args, out) -> int:
    p, raw = _params(args)
    c = classify(p, args.strict_3j, args.literal_3kl)
    chi = euler_characteristic(p)
    info, lines = _header(p, raw)
    info.update(verdict="Smooth" if c.smooth else "Singular", chi=chi,
                case=c.case.value if c.smooth else None,
                reason=None if c.smooth else c.reason.value)
    lines.append(f"verdict: {c}")
    if c.smooth:
        std = is_standard(p)
        rv = rationality_verdict(p)
        info.update(standard=std, rational=rv.rational, rationality=rv.verdict)
        lines += [f"case: {c.case}", f"chi: {chi}",
                  f"standard: {'yes' if std else 'no (Y4 in both base loci)'}",
                  f"rationality: {rv.verdict}"]
    else:
        lines.append(f"chi: {chi}")
    _emit(out, args, info, lines)
    return EXIT_OK


def cmd_euler(args, out) -> int:
    p, raw = _params(args)
    chi = euler_characteristic(p)
    info, lines = _header(p, raw)
    info["chi"] = chi
    lines.append(f"chi: {chi}")
    _emit(out, args, info, lines)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    try:
        bounds = SearchBounds(args.d1_max, args.b_min, args.b_max)
    except ValueError as exc:
        raise UsageError(str(exc))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        recs = enumerate_by_chi(args.chi, bounds, args.standard_only,
                                args.strict_3j, args.literal_3kl)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if args.format in ("json", "csv"):
        out.write(export_atlas(recs, args.format).decode("utf-8"))
        return EXIT_OK
    if not recs:
        out.write(f"no smooth families with chi = {args.chi} for d1 <= {bounds.d1_max}, "
                  f"b in [{bounds.b_min}, {bounds.b_max}]\n")
        return EXIT_OK
    for r in recs:
        out.write(f"{str(r.params):<24} case {r.case.value:<3} chi {r.chi:>4}  "
                  f"{'standard' if r.standard else 'nonstandard':<11}  {r.rationality.verdict}\n")
    return EXIT_OK


def cmd_cases(args, out) -> int:
    found = None
    if args.realize:
        found = realizability_sweep(SearchBounds(args.d1_max), args.strict_3j, args.literal_3kl)
    payload, lines = [], []
    for case in CaseId:
        row = {"case": case.value, "stratum": str(case.stratum)}
        text = f"{case.value:<3} {str(case.stratum):<6}"
        if found is not None:
            w = found[case]
            row["witness"] = w.as_dict() if w else None
            text += f" {w}" if w else " none found"
        payload.append(row)
        lines.append(text.rstrip())
    if found is not None:
        missing = sum(v is None for v in found.values())
        lines.append(f"realized {len(found) - missing}/{len(found)} within d1 <= {args.d1_max}")
    _emit(out, args, {"cases": payload}, lines)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    p, raw = _params(args)
    try:
        v = oracle_smooth(p, args.trials, args.prime, _seed(args))
    except NonGeneric as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONGENERIC
    info, lines = _header(p, raw)
    info.update(v.as_dict())
    lines += [f"verdict: {v.verdict}",
              f"(*): {'ok' if v.star_ok else 'fails'}   (**): {'ok' if v.dstar_ok else 'fails'}",
              f"confidence: {v.confidence}",
              f"trials run: {v.trials_run} over {v.field}"]
    if v.passing_seed is not None:
        lines.append(f"passing instance seed: {v.passing_seed}")
    for w in v.witnesses:
        where = "" if w.t is None else f" t={_point(w.t)} x={_point(w.x)}"
        lines.append(f"witness {w.condition} on {w.stratum}:{where} [{w.locus}]")
    _emit(out, args, info, lines)
    return EXIT_OK


def cmd_crosscheck(args, out) -> int:
    box = crosscheck_box(args.d1_max, args.b_min, args.b_max)
    rep = crosscheck(box, args.trials, args.prime, _seed(args), args.strict_3j, args.literal_3kl)
    print(f"crosscheck: {rep.total} tuples in {rep.elapsed:.1f}s", file=sys.stderr)
    info = rep.as_dict()
    info.pop("elapsed")
    lines = [f"tuples: {rep.total}", f"smooth by criterion: {rep.smooth}",
             f"disagreements: {len(rep.disagreements)}",
             f"non-generic: {len(rep.nongeneric)}"]
    for d in rep.disagreements:
        lines.append(f"  {d.params}: criterion {d.criterion}, oracle {d.oracle.verdict}")
    _emit(out, args, info, lines)
    if rep.disagreements:
        return EXIT_DISAGREE
    if rep.nongeneric_rate >= NONGENERIC_BUDGET:
        return EXIT_NONGENERIC
    return EXIT_OK


def cmd_x2_lines(args, out) -> int:
    seed = _seed(args)
    try:
        res = x2_lines(args.prime, seed)
    except NonGeneric as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONGENERIC
    info = res.as_dict()
    info["prime"] = args.prime
    lines = [f"lines through Y5 in fibers of X2: {res.count}",
             f"instance seed {res.seed} over GF({args.prime}), attempts {res.attempts}"]
    for ln in res.lines:
        lines.append(f"  t={_point(ln.t)} direction={_point(ln.v)}")
    _emit(out, args, info, lines)
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "euler": cmd_euler,
    "enumerate": cmd_enumerate,
    "cases": cmd_cases,
    "verify": cmd_verify,
    "crosscheck": cmd_crosscheck,
    "x2-lines": cmd_x2_lines,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_negative(argv))
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
