"""Command-line front end: ``gencheb {tables,char,frieze,verify,errata}``.

Reports go to stdout as JSON with sorted keys; timing goes to stderr so that
repeated runs produce identical stdout.  Exit status is 0 on success, 1 when
a verification fails and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import verify
from .chebyshev import errata, table
from .errors import InvalidShape
from .exactalg import to_json_obj, to_str
from .meshquiver import Moebius, frieze_labels, moebius_period, moebius_sequence, parse_shape, x_seeds
from .typea import TypeAModule, cc_character, dim_vector, modules


class UsageError(Exception):
    pass


def _positive(flag: str):
    def conv(text: str) -> int:
        try:
            val = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} expects an integer, got {text!r}") from None
        if val < 1:
            raise argparse.ArgumentTypeError(f"{flag} must be >= 1, got {val}")
        return val

    return conv


def _nonneg(flag: str):
    def conv(text: str) -> int:
        try:
            val = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} expects an integer, got {text!r}") from None
        if val < 0:
            raise argparse.ArgumentTypeError(f"{flag} must be >= 0, got {val}")
        return val

    return conv


def _rank(text: str):
    if text in ("inf", "infinity", "oo"):
        return None
    return _positive("--rank")(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def build_parser() -> argparse.ArgumentParser:
    d = verify.DEFAULTS
    parser = _Parser(prog="gencheb", description="Generalized Chebyshev polynomials and cluster characters.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    tp = sub.add_parser("tables", help="print P_n (infinite rank) or P_{n,p}")
    tp.add_argument("--rank", type=_rank, default=None, help="positive integer or 'inf' (default)")
    tp.add_argument("--max-n", type=_positive("--max-n"), default=5)
    tp.add_argument("--format", choices=("json", "tsv"), default="json")
    tp.add_argument("--errata", action="store_true", help="compare with the printed reference tables")

    cp = sub.add_parser("char", help="Caldero-Chapoton characters of the A_r quiver")
    cp.add_argument("--r", type=_positive("--r"), required=True)
    group = cp.add_mutually_exclusive_group(required=True)
    group.add_argument("--module", help="socle and length as 'i,n'")
    group.add_argument("--table", action="store_true", help="all indecomposables")

    fp = sub.add_parser("frieze", help="propagate a cluster-mesh frieze")
    fp.add_argument("--shape", required=True, help="tube:p=P,nmax=N | za:imin=A,imax=B,nmax=N | moebius:r=R")
    fp.add_argument("--seeds", required=True, help="'x' for symbolic seeds or a comma-separated rational list")

    suites = ", ".join(verify.SUITES + ("all",))
    vp = sub.add_parser("verify", help=f"run a verification suite ({suites})",
                        description=f"Suites: {suites}.")
    vp.add_argument("suite", choices=verify.SUITES + ("all",))
    vp.add_argument("--max-r", type=_positive("--max-r"), default=None,
                    help=f"type-A rank bound, or Moebius r bound (defaults {d['max_r']} / {d['moebius_r']})")
    vp.add_argument("--p", type=_positive("--p"), default=d["p"], help="largest tube rank")
    vp.add_argument("--max-len", type=_positive("--max-len"), default=None,
                    help=f"largest quasi-length (defaults {d['max_len']} tube / {d['wild_max_len']} wild)")
    vp.add_argument("--max-n", type=_positive("--max-n"), default=d["max_n"])
    vp.add_argument("--max-rank", type=_positive("--max-rank"), default=d["max_rank"])
    vp.add_argument("--trials", type=_positive("--trials"), default=d["trials"])
    vp.add_argument("--seed", type=_nonneg("--seed"), default=d["seed"])
    vp.add_argument("--jobs", type=_positive("--jobs"), default=None,
                    help=f"worker processes (default ${verify.JOBS_ENV} or the CPU count)")

    sub.add_parser("errata", help="list printed table entries that disagree with the recurrence")
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _poly_entry(p) -> dict:
    return {"poly": to_str(p), "terms": to_json_obj(p)}


def cmd_tables(args) -> tuple[str, int]:
    rows = table(args.rank, args.max_n, min_n=1)
    label = "inf" if args.rank is None else str(args.rank)
    flagged = []
    if args.errata:
        flagged = [e for e in errata([args.rank]) if e["n"] <= args.max_n]
    if args.format == "tsv":
        lines = ["#rank\t" + label, "#n\tpolynomial"]
        lines += [f"{n}\t{to_str(p)}" for n, p in rows.items()]
        for e in flagged:
            lines.append(f"#errata\tn={e['n']}\tprinted={e['printed']}\trecomputed={e['recomputed']}")
        return "\n".join(lines) + "\n", 0
    out = {"rank": label, "table": {str(n): _poly_entry(p) for n, p in rows.items()}}
    if args.errata:
        out["errata"] = flagged
    return _dump(out), 0


def _parse_module(text: str, r: int) -> TypeAModule:
    try:
        i, n = (int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"--module expects 'i,n', got {text!r}") from None
    if n < 1:
        raise UsageError(f"--module: length must be >= 1, got {n}")
    try:
        return TypeAModule(r, i, n)
    except ValueError as exc:
        raise UsageError(f"--module: {exc}") from None


def cmd_char(args) -> tuple[str, int]:
    mods = modules(args.r) if args.table else [_parse_module(args.module, args.r)]
    entries = [
        {"module": m.key, "i": m.i, "n": m.n, "dim_vector": list(dim_vector(m)), **_poly_entry(cc_character(m))}
        for m in mods
    ]
    return _dump({"r": args.r, "characters": entries}), 0


def _parse_seeds(text: str, shape):
    if text.strip() == "x":
        try:
            return x_seeds(shape)
        except InvalidShape as exc:
            raise UsageError(f"--seeds: {exc}") from None
    parts = [p.strip() for p in text.split(",")]
    if any(p.startswith("x") for p in parts):
        raise UsageError("--seeds: mixed symbolic and rational seeds are not allowed")
    try:
        vals = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--seeds: cannot parse {text!r} as rationals") from None
    if isinstance(shape, Moebius):
        period = moebius_period(shape.r, shape.glide_offset)
        if len(vals) == shape.r:
            vals = moebius_sequence(shape.r, vals, period)
        elif len(vals) != period:
            raise UsageError(f"--seeds: Moebius band r={shape.r} takes {shape.r} or {period} values")
        return dict(enumerate(vals))
    if hasattr(shape, "p"):
        idx = list(range(shape.p))
    else:
        idx = list(range(shape.i_min, shape.i_max + 1))
    if len(vals) != len(idx):
        raise UsageError(f"--seeds: shape needs {len(idx)} values, got {len(vals)}")
    return dict(zip(idx, vals))


def cmd_frieze(args) -> tuple[str, int]:
    try:
        shape = parse_shape(args.shape)
    except InvalidShape as exc:
        raise UsageError(f"--shape: {exc}") from None
    seeds = _parse_seeds(args.seeds, shape)
    labels = frieze_labels(shape, seeds)
    entries = []
    for (i, n), val in sorted(labels.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        text = to_str(val) if hasattr(val, "terms") else str(val)
        entries.append({"i": i, "n": n, "label": text})
    return _dump({"shape": args.shape, "labels": entries}), 0


def cmd_verify(args) -> tuple[str, int]:
    d = verify.DEFAULTS
    jobs = args.jobs if args.jobs is not None else verify.default_jobs()
    suite = args.suite
    if suite == "presentations":
        rep = verify.suite_presentations(args.max_r or d["max_r"])
    elif suite == "tube-mult":
        rep = verify.suite_tube_mult(args.p, args.max_len or d["max_len"], jobs)
    elif suite == "wild-mult":
        rep = verify.suite_wild_mult(args.max_len or d["wild_max_len"], jobs)
    elif suite == "chebyshev-routes":
        rep = verify.suite_chebyshev_routes(args.max_n, args.max_rank)
    elif suite == "moebius":
        rep = verify.suite_moebius(args.max_r or d["moebius_r"], args.trials, args.seed)
    else:
        bounds = {"p": args.p, "max_n": args.max_n, "max_rank": args.max_rank,
                  "trials": args.trials, "seed": args.seed}
        if args.max_r:
            bounds.update(max_r=args.max_r, moebius_r=args.max_r)
        if args.max_len:
            bounds.update(max_len=args.max_len, wild_max_len=args.max_len)
        rep = verify.suite_all(jobs, **bounds)
    rep = {"suite": suite, **rep}
    if not rep["ok"]:
        for key in rep["failures"]:
            print(f"FAIL {key}", file=sys.stderr)
    return _dump(rep), 0 if rep["ok"] else 1


def cmd_errata(args) -> tuple[str, int]:
    return _dump({"errata": errata()}), 0


COMMANDS = {
    "tables": cmd_tables,
    "char": cmd_char,
    "frieze": cmd_frieze,
    "verify": cmd_verify,
    "errata": cmd_errata,
}


def main(argv=None) -> int:
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        text, status = COMMANDS[args.command](args)
    except UsageError as exc:
        print(str(exc).rstrip(), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"gencheb: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"gencheb: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    sys.stdout.flush()
    print(f"elapsed {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
