"""Command-line front end.

    nilmult classify   -p 3 -t 2,2,1,1,0
    nilmult multiplier -p 2 -t 3,1,1,1,1 --method both
    nilmult multiplier --relators rels.txt
    nilmult epicenter  -p 3 -t 2,1,1,0,1
    nilmult sweep --primes 2,3 --max-exp 2 --out report.jsonl

Output is one JSON object per line.  Exit status: 0 when every requested
check passes, 1 on a mathematical disagreement, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from pathlib import Path

from . import theory
from .errors import InadmissibleParams, NoClosedForm, NotClassTwo, NotCentral
from .lattice import InfiniteQuotient
from .oracle import multiplier_of, read_relators, two_nilpotent_multiplier
from .words import WordSyntaxError

REPORT_FIELDS = (
    "params",
    "canonical",
    "family",
    "label",
    "capable",
    "two_capable",
    "multiplier_closed",
    "multiplier_oracle",
    "agreement",
)

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_tuple(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"tuple must be five comma-separated integers, got {text!r}")
    if len(vals) != 5 or min(vals) < 0:
        raise UsageError(f"tuple must be five nonnegative integers, got {text!r}")
    return vals


def _parse_primes(text: str) -> list[int]:
    try:
        primes = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad prime list {text!r}")
    if not primes:
        raise UsageError("prime list is empty")
    return primes


def _fmt_tuple(t) -> str:
    return ",".join(str(v) for v in t)


def _emit(obj, out=None):
    print(json.dumps(obj), file=out or sys.stdout)


def report_entry(p: int, t) -> dict:
    gp = theory.validate(p, t)
    cls = theory.canonicalize(p, gp)
    try:
        closed = theory.closed_form_multiplier(p, cls.canonical).as_list()
    except NoClosedForm:
        closed = None
    oracle = multiplier_of(cls.canonical).as_list()
    return {
        "params": f"{p}:{_fmt_tuple(gp.tuple)}",
        "canonical": _fmt_tuple(cls.canonical.tuple),
        "family": cls.family,
        "label": cls.label,
        "capable": theory.is_capable(p, gp),
        "two_capable": theory.is_2_capable(p, gp),
        "multiplier_closed": closed,
        "multiplier_oracle": oracle,
        # vacuously true when there is no closed form to compare against
        "agreement": closed is None or closed == oracle,
    }


def admissible_tuples(p: int, max_exp: int):
    for al, be, ga in product(range(1, max_exp + 1), repeat=3):
        if al >= be >= ga:
            for rh, si in product(range(ga + 1), repeat=2):
                yield (al, be, ga, rh, si)


def _entry_job(args):
    return report_entry(*args)


def build_report(primes, max_exp: int, jobs: int = 1) -> list[dict]:
    tasks = [(p, t) for p in sorted(set(primes)) for t in admissible_tuples(p, max_exp)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_entry_job, tasks, chunksize=8))
    else:
        entries = [_entry_job(t) for t in tasks]
    # map() preserves task order, which is the canonical (p, tuple) order
    return entries


def format_report(entries, fmt: str) -> str:
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.DictWriter(buf, fieldnames=REPORT_FIELDS, lineterminator="\n")
        writer.writeheader()
        for e in entries:
            row = dict(e)
            for key in ("multiplier_closed", "multiplier_oracle"):
                row[key] = "" if row[key] is None else " ".join(map(str, row[key]))
            row["label"] = row["label"] or ""
            writer.writerow(row)
    else:
        for e in entries:
            buf.write(json.dumps(e) + "\n")
    return buf.getvalue()


def cmd_classify(args) -> int:
    t = _parse_tuple(args.tuple)
    cls = theory.canonicalize(args.p, t)
    _emit({
        "params": f"{args.p}:{_fmt_tuple(t)}",
        "canonical": _fmt_tuple(cls.canonical.tuple),
        "family": cls.family,
        "label": cls.label,
        "capable": theory.is_capable(args.p, t),
    })
    return EXIT_OK


def cmd_multiplier(args) -> int:
    if args.relators:
        pres = read_relators(args.relators, args.p or 0)
        inv = two_nilpotent_multiplier(pres)
        _emit({"relators": str(args.relators), "multiplier_oracle": inv.as_list()})
        return EXIT_OK
    if args.p is None or args.tuple is None:
        raise UsageError("multiplier needs -p and -t, or --relators")
    t = _parse_tuple(args.tuple)
    gp = theory.validate(args.p, t)
    out = {"params": f"{args.p}:{_fmt_tuple(t)}"}
    closed = oracle = None
    if args.method in ("closed", "both"):
        try:
            closed = theory.closed_form_multiplier(args.p, gp).as_list()
        except NoClosedForm:
            closed = None
        out["closed"] = closed if closed is not None else "n/a"
    if args.method in ("oracle", "both"):
        oracle = multiplier_of(theory.canonicalize(args.p, gp).canonical).as_list()
        out["oracle"] = oracle
    status = EXIT_OK
    if args.method == "both":
        agree = closed is None or closed == oracle
        out["agree"] = agree
        status = EXIT_OK if agree else EXIT_DISAGREE
    _emit(out)
    return status


def cmd_epicenter(args) -> int:
    t = _parse_tuple(args.tuple)
    gp = theory.validate(args.p, t)
    canon = theory.canonicalize(args.p, gp)
    witness = theory.epicenter_witness(args.p, gp)
    if witness is None:
        _emit({"params": f"{args.p}:{_fmt_tuple(t)}", "label": canon.label,
               "witness": None, "epicenter": "trivial epicenter"})
        return EXIT_OK
    confirmed = theory.epicenter_membership(args.p, canon.canonical, witness)
    _emit({
        "params": f"{args.p}:{_fmt_tuple(t)}",
        "label": canon.label,
        "witness": witness.word(),
        "membership": "confirmed" if confirmed else "refuted",
    })
    return EXIT_OK if confirmed else EXIT_DISAGREE


def cmd_sweep(args) -> int:
    primes = _parse_primes(args.primes)
    if args.max_exp < 1:
        raise UsageError("--max-exp must be at least 1")
    for p in primes:
        theory.validate(p, (1, 1, 1, 1, 1))
    entries = build_report(primes, args.max_exp, args.jobs)
    fmt = args.format or ("csv" if args.out and str(args.out).endswith(".csv") else "jsonl")
    text = format_report(entries, fmt)
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    bad = [e for e in entries if not e["agreement"]]
    for e in bad:
        print(f"disagreement: {e['params']} closed={e['multiplier_closed']} "
              f"oracle={e['multiplier_oracle']}", file=sys.stderr)
    return EXIT_DISAGREE if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilmult", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="canonical tuple, family and label")
    p.add_argument("-p", "--primes", dest="p", type=int, required=True)
    p.add_argument("-t", "--tuple", required=True, help="alpha,beta,gamma,rho,sigma")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("multiplier", help="2-nilpotent multiplier")
    p.add_argument("-p", "--primes", dest="p", type=int)
    p.add_argument("-t", "--tuple")
    p.add_argument("--method", choices=("closed", "oracle", "both"), default="both")
    p.add_argument("--relators", type=Path, help="relator file, one word per line")
    p.set_defaults(func=cmd_multiplier)

    p = sub.add_parser("epicenter", help="epicenter witness and oracle confirmation")
    p.add_argument("-p", "--primes", dest="p", type=int, required=True)
    p.add_argument("-t", "--tuple", required=True)
    p.set_defaults(func=cmd_epicenter)

    p = sub.add_parser("sweep", help="closed form vs oracle over all admissible tuples")
    p.add_argument("-p", "--primes", required=True, help="comma-separated primes")
    p.add_argument("--max-exp", type=int, required=True)
    p.add_argument("--out", type=Path)
    p.add_argument("--format", choices=("jsonl", "csv"))
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InadmissibleParams, WordSyntaxError, NotCentral) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotClassTwo, InfiniteQuotient) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
