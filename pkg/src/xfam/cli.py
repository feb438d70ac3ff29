"""Command-line front end.

Exit status: 0 on success, 1 when a bound fails in a proven regime,
2 on usage, parse or hypothesis errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io as fio
from .rational import format_rational, parse_rational
from .search import (
    HypothesisError,
    count_upsets,
    enumerate_upsets,
    reports_to_csv,
    verify_af,
    verify_daykin,
    verify_katona_single,
    verify_le3_reduction,
    verify_tm1,
    verify_tm2,
    verify_tm3,
    verify_tm4,
    verify_uniform_cross,
)
from .search.suite import SUITES
from .seqfam import SeqFamily, is_cross_t_intersecting_seq, is_cross_tvec_intersecting, seq_dual
from .setfam import SetFamily, is_cross_t_intersecting, measure, t_dual
from .shift import ShiftSpec, shift_AB, stabilize_pair

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e))


def _threshold(text):
    """``2`` or a per-symbol vector ``1,1,0``."""
    try:
        if "," in text:
            return tuple(int(v) for v in text.split(","))
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad threshold {text!r}")


def _elements(text):
    if not text.strip():
        return []
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad element list {text!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _set_family(path) -> SetFamily:
    F = fio.parse_family(path)
    if not isinstance(F, SetFamily):
        raise UsageError(f"{path}: expected a set family")
    return F


# -- subcommands ---------------------------------------------------------------


def cmd_measure(a):
    F = _set_family(a.family)
    _emit(format_rational(measure(F, a.p)), a.out)
    return EXIT_OK


def cmd_check(a):
    fams = [fio.parse_family(p) for p in a.families]
    if a.cross and len(fams) != 2:
        raise UsageError("check --cross takes two families")
    if not a.cross and len(fams) != 1:
        raise UsageError("check takes one family (or two with --cross)")
    F1, F2 = fams[0], fams[-1]
    if type(F1) is not type(F2):
        raise UsageError("cannot compare a set family with a sequence family")
    if isinstance(F1, SeqFamily):
        ok = (is_cross_tvec_intersecting if isinstance(a.t, tuple) else is_cross_t_intersecting_seq)(F1, F2, a.t)
    else:
        if isinstance(a.t, tuple):
            raise UsageError("threshold vectors apply to sequence families only")
        ok = is_cross_t_intersecting(F1, F2, a.t)
    _emit("true" if ok else "false", a.out)
    return EXIT_OK


def cmd_dual(a):
    F = fio.parse_family(a.family)
    if isinstance(F, SeqFamily):
        D = seq_dual(F, a.t)
    else:
        if isinstance(a.t, tuple):
            raise UsageError("threshold vectors apply to sequence families only")
        D = t_dual(F, a.t)
    _emit(fio.dumps(D), a.out)
    return EXIT_OK


def cmd_shift(a):
    F = _set_family(a.family)
    _emit(fio.dumps(shift_AB(F, ShiftSpec.from_sets(a.A, a.B))), a.out)
    return EXIT_OK


def cmd_stabilize(a):
    F1, F2 = _set_family(a.families[0]), _set_family(a.families[1])
    G1, G2, trace = stabilize_pair(F1, F2, a.t)
    if a.trace:
        with open(a.trace, "w") as fh:
            fh.write(trace.to_json() + "\n")
    if a.csv:
        with open(a.csv, "w") as fh:
            fh.write(trace.to_csv())
    _emit(json.dumps({"F1": fio.to_obj(G1), "F2": fio.to_obj(G2), "steps": len(trace.steps)}), a.out)
    return EXIT_OK


def cmd_enumerate(a):
    if a.list:
        _emit("\n".join(fio.dumps(F) for F in enumerate_upsets(a.n)), a.out)
    else:
        _emit(str(count_upsets(a.n)), a.out)
    return EXIT_OK


def _need(a, *names):
    missing = [f"--{n}" for n in names if getattr(a, n) is None]
    if missing:
        raise UsageError(f"verify {a.theorem} needs {' '.join(missing)}")


def _run_verify(a):
    thm = a.theorem
    if a.mode == "sampled" and a.seed is None:
        raise UsageError("sampled mode requires an explicit --seed")
    if thm == "tm1":
        _need(a, "n", "t", "p1", "p2")
        return verify_tm1(a.n, a.t, a.p1, a.p2, workers=a.workers)
    if thm == "tm3":
        _need(a, "n", "t", "p")
        return verify_tm3(a.n, a.t, a.p, workers=a.workers)
    if thm == "katona":
        _need(a, "n", "t")
        return verify_katona_single(a.n, a.t, workers=a.workers)
    if thm == "tm2":
        _need(a, "m", "n", "t")
        return verify_tm2(a.m, a.n, a.t, a.mode, a.trials, a.seed)
    if thm == "tm4":
        _need(a, "m", "n", "t")
        tv = a.t if isinstance(a.t, tuple) else (a.t,)
        return verify_tm4(a.m, a.n, tv, a.mode, a.trials, a.seed)
    if thm == "iu":
        _need(a, "n")
        return verify_tm4(2, a.n, (1, 1), a.mode, a.trials, a.seed)
    if thm == "af":
        _need(a, "m", "n", "t")
        return verify_af(a.m, a.n, a.t)
    if thm == "le1":
        _need(a, "n", "k", "l", "t")
        return verify_uniform_cross(a.n, a.k, a.l, a.t, a.mode, a.trials, a.seed)
    if thm == "le3":
        _need(a, "m", "n", "t")
        return verify_le3_reduction(a.m, a.n, a.t)
    if thm == "le8":
        _need(a, "n", "a", "b")
        return verify_daykin(a.n, a.a, a.b)
    raise UsageError(f"unknown theorem {thm!r}")


def cmd_verify(a):
    if isinstance(a.t, tuple) and a.theorem != "tm4":
        raise UsageError(f"verify {a.theorem} takes an integer --t")
    r = _run_verify(a)
    _emit(reports_to_csv([r]) if a.format == "csv" else r.to_json(indent=2), a.out)
    return EXIT_FAIL if r.failing else EXIT_OK


def cmd_report(a):
    reports = list(SUITES[a.suite](workers=a.workers))
    text = reports_to_csv(reports)
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if a.json:
        with open(a.json, "w") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=1)
    bad = [r for r in reports if r.failing]
    print(f"{len(reports)} checks, {len(bad)} failing", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


# -- parser --------------------------------------------------------------------


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("XFAM_WORKERS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="xfam", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=fn)
        p.add_argument("--out", help="write output here instead of stdout")
        return p

    p = add("measure", cmd_measure, "exact p-biased measure of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--p", required=True, type=_rational)

    p = add("check", cmd_check, "t-intersecting / cross t-intersecting test")
    p.add_argument("--cross", action="store_true")
    p.add_argument("--t", required=True, type=_threshold)
    p.add_argument("families", nargs="+")

    p = add("dual", cmd_dual, "largest cross t-intersecting partner")
    p.add_argument("--t", required=True, type=_threshold)
    p.add_argument("family")

    p = add("shift", cmd_shift, "apply one (A,B)-shift")
    p.add_argument("--A", required=True, type=_elements, help="comma-separated elements, may be empty")
    p.add_argument("--B", required=True, type=_elements)
    p.add_argument("family")

    p = add("stabilize", cmd_stabilize, "jointly shift a cross pair until fully stable")
    p.add_argument("--t", required=True, type=int)
    p.add_argument("--trace", help="JSON trace output")
    p.add_argument("--csv", help="CSV trace output (step, level, A, B, potential)")
    p.add_argument("families", nargs=2)

    p = add("enumerate", cmd_enumerate, "count or list up-sets on [n]")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--list", action="store_true")

    p = add("verify", cmd_verify, "run one bound check")
    p.add_argument("theorem", choices=["tm1", "tm2", "tm3", "tm4", "iu", "af", "katona", "le1", "le3", "le8"])
    for flag in ("n", "m", "k", "l", "a", "b"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--t", type=_threshold)
    for flag in ("p", "p1", "p2"):
        p.add_argument(f"--{flag}", type=_rational)
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--workers", type=int, default=_default_workers())

    p = add("report", cmd_report, "run a named suite of checks, CSV output")
    p.add_argument("--suite", choices=sorted(SUITES), default="desk")
    p.add_argument("--json", help="also write the full reports as JSON")
    p.add_argument("--workers", type=int, default=_default_workers())
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, fio.ParseError, HypothesisError, ValueError, ZeroDivisionError) as e:
        print(f"xfam: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
