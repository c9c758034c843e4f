"""Command-line front end: ``mf <subcommand> ...``.

Exit status is 0 when every requested check passes, 1 when a check
fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import bijections, identities, series, telescope
from .algebra import BiPoly
from .triangle import build_triangle, narayana, specialized_rows

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _point(text: str) -> tuple[int, int]:
    try:
        x0, y0 = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x0,y0 integers, got {text!r}") from None
    return x0, y0


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def max_workers() -> int:
    """Worker processes for sweeps: MF_THREADS if set, else the CPU count."""
    cap = os.environ.get("MF_THREADS")
    if not cap:
        return os.cpu_count() or 1
    try:
        return max(1, int(cap))
    except ValueError:
        raise UsageError(f"MF_THREADS must be an integer, got {cap!r}") from None


class Output:
    """Writes to --output (or stdout); flushes per line so reports stream."""

    def __init__(self, path: str | None):
        self.path = path
        self.fh = open(path, "w", newline="") if path else sys.stdout

    def write(self, text: str) -> None:
        self.fh.write(text)
        self.fh.flush()

    def line(self, text: str = "") -> None:
        self.write(text + "\n")

    def json(self, doc: dict) -> None:
        self.write(json.dumps(doc, indent=2) + "\n")

    def close(self) -> None:
        if self.path:
            self.fh.close()


def _csv_text(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf).writerows(rows)  # RFC 4180: CRLF, minimal quoting
    return buf.getvalue()


# -- triangle -------------------------------------------------------------


def cmd_triangle(args, out: Output) -> int:
    fmt = args.format or ("csv" if args.at else "json")
    if args.at:
        rows = specialized_rows(args.rows, *args.at)
        if fmt == "json":
            out.json({"schema_version": SCHEMA_VERSION, "at": list(args.at), "rows": rows})
        elif fmt == "csv":
            out.write(_csv_text(rows))
        else:
            for n, row in enumerate(rows):
                out.line(f"{n}: " + " ".join(str(v) for v in row))
        return EXIT_OK
    tri = build_triangle(args.rows)
    if fmt == "json":
        out.json({
            "schema_version": SCHEMA_VERSION,
            "rows": [[p.to_json_obj() for p in row] for row in tri.rows()],
        })
    elif fmt == "csv":
        out.write(_csv_text([[p.to_text() for p in row] for row in tri.rows()]))
    else:
        for n, row in enumerate(tri.rows()):
            out.line(f"{n}: " + " | ".join(p.to_text() for p in row))
    return EXIT_OK


# -- verify ---------------------------------------------------------------


def _run_sweep(job):
    tag, max_param, point, keep_lines = job
    lines = []

    def note(params, ok):
        if keep_lines:
            lines.append(f"{'ok  ' if ok else 'FAIL'} {tag} {params}")

    rep = identities.sweep(tag, max_param, point, note if keep_lines else None)
    return rep, lines


def cmd_verify(args, out: Output) -> int:
    if args.all == bool(args.id):
        raise UsageError("give exactly one of --id or --all")
    point = None
    if args.mode == "at-point":
        if args.at is None:
            raise UsageError("--mode at-point needs --at x0,y0")
        point = args.at
    if args.all:
        tags = identities.identity_tags()
    else:
        try:
            tags = [identities.get_identity(args.id).tag]
        except identities.UnknownIdentity:
            raise UsageError(
                f"unknown identity {args.id!r}; known: {', '.join(identities.identity_tags(True))}"
            ) from None

    stream = args.format == "text" and not args.summary
    jobs = [(tag, args.max, point, stream) for tag in tags]
    workers = min(max_workers(), len(jobs))
    reports = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_sweep, jobs))  # map keeps submission order
        for rep, lines in results:
            for ln in lines:
                out.line(ln)
            if args.format == "text":
                out.line(rep.line())
            reports.append(rep)
    else:
        for tag in tags:
            note = (lambda params, ok, tag=tag: out.line(f"{'ok  ' if ok else 'FAIL'} {tag} {params}")) if stream else None
            rep = identities.sweep(tag, args.max, point, note)
            if args.format == "text":
                out.line(rep.line())
            reports.append(rep)

    passed = all(r.passed for r in reports)
    if args.format == "json":
        out.json({
            "schema_version": SCHEMA_VERSION,
            "mode": args.mode,
            "at": list(point) if point else None,
            "max": args.max,
            "passed": passed,
            "identities": [r.to_dict() for r in reports],
        })
    else:
        total = sum(r.instances for r in reports)
        out.line(f"{'PASS' if passed else 'FAIL'}: {len(reports)} identities, {total} instances")
    return EXIT_OK if passed else EXIT_FAIL


# -- bijection ------------------------------------------------------------


def cmd_bijection(args, out: Output) -> int:
    if args.map == "lemma31":
        rep = bijections.check_lemma31(args.max_n)
    elif args.map == "phi":
        rep = bijections.check_phi(args.max_n, max_r=args.max_r, max_ell=args.max_l)
    else:
        rep = bijections.check_thm41(args.max_n)
    if args.format == "json":
        doc = rep.to_dict()
        doc["schema_version"] = SCHEMA_VERSION
        doc["max_n"] = args.max_n
        out.json(doc)
    else:
        for f in rep.failures[:20]:
            out.line(f"counterexample: {f}")
        out.line(f"{'PASS' if rep.passed else 'FAIL'} {rep.name} max_n={args.max_n} checked={rep.checked}")
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- telescope ------------------------------------------------------------


def cmd_telescope(args, out: Output) -> int:
    tags = sorted(telescope.CERTIFICATES) if args.cert == "all" else [args.cert]
    reports = []
    for tag in tags:
        try:
            cert = telescope.get_certificate(tag)
            F = telescope.get_summand(args.summand or cert.summand)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        wz = telescope.wz_check(F, cert, args.max_m)
        const = telescope.constant_sum_check(F, args.max_m)
        reports += [wz, const]
        if args.format == "text":
            out.line(wz.line())
            out.line(const.line())
    passed = all(r.passed for r in reports)
    if args.format == "json":
        out.json({
            "schema_version": SCHEMA_VERSION,
            "max_m": args.max_m,
            "passed": passed,
            "checks": [r.to_dict() for r in reports],
        })
    return EXIT_OK if passed else EXIT_FAIL


# -- transform ------------------------------------------------------------


def _source(name: str, at):
    if name == "pascal":
        return identities.SOURCES["pascal"]
    if name == "shapiro":
        return identities.SOURCES["shapiro"]
    if name == "narayana":
        # shifted so that row n holds N(n+1, 1..n+1)
        return lambda n, k: narayana(n + 1, k + 1) if n >= 0 else 0
    return identities.motzkin_source(at)


def _cell(v):
    return v.to_json_obj() if isinstance(v, BiPoly) else v


def cmd_transform(args, out: Output) -> int:
    if args.at and args.source != "motzkin":
        raise UsageError("--at only applies to --source motzkin")
    A = _source(args.source, args.at)
    try:
        rows = [identities.minor_sum_transform(A, args.m, args.r, args.l, args.p, n)
                for n in range(args.rows + 1)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.json({
            "schema_version": SCHEMA_VERSION,
            "source": args.source,
            "params": {"m": args.m, "r": args.r, "l": args.l, "p": args.p},
            "at": list(args.at) if args.at else None,
            "rows": [{"n": n, "row": [_cell(v) for v in row], "sum": _cell(s)}
                     for n, (row, s) in enumerate(rows)],
        })
    elif args.format == "csv":
        out.write(_csv_text([[str(s)] + [str(v) for v in row] for row, s in rows]))
    else:
        for n, (row, s) in enumerate(rows):
            out.line(f"{n}: " + " ".join(str(v) for v in row) + f" | sum {s}")
    return EXIT_OK


# -- series ---------------------------------------------------------------


def cmd_series(args, out: Output) -> int:
    k_max = args.order if args.k_max is None else args.k_max
    if k_max > args.order:
        raise UsageError("--k-max cannot exceed --order")
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    checks = [
        series.verify_functional_equation(args.order),
        series.verify_riordan(args.order, k_max),
        series.verify_catalan_powers(args.alpha_max, min(args.order, args.alpha_max)),
    ]
    passed = all(c.passed for c in checks)
    if args.format == "json":
        out.json({
            "schema_version": SCHEMA_VERSION,
            "order": args.order,
            "passed": passed,
            "checks": [
                {"name": c.name, "order": c.order, "passed": c.passed,
                 "first_failure": c.first_failure, "detail": c.detail, "instances": c.instances}
                for c in checks
            ],
        })
    else:
        for c in checks:
            out.line(c.line())
    return EXIT_OK if passed else EXIT_FAIL


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mf", description="Weighted Motzkin triangles and identity checks.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("triangle", help="print rows 0..N of the weight triangle")
    t.add_argument("--rows", type=_nonneg, required=True)
    t.add_argument("--at", type=_point, help="evaluate at x0,y0")
    t.add_argument("--format", choices=["json", "csv", "text"])
    t.set_defaults(func=cmd_triangle)

    v = sub.add_parser("verify", help="sweep registered identities")
    v.add_argument("--id")
    v.add_argument("--all", action="store_true")
    v.add_argument("--max", type=_nonneg, default=8)
    v.add_argument("--mode", choices=["symbolic", "at-point"], default="symbolic")
    v.add_argument("--at", type=_point)
    v.add_argument("--format", choices=["json", "text"], default="text")
    v.add_argument("--summary", action="store_true", help="text mode: one line per identity")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bijection", help="exhaustive round-trip checks")
    b.add_argument("--map", choices=["lemma31", "phi", "thm41"], required=True)
    b.add_argument("--check", choices=["roundtrip"], default="roundtrip")
    b.add_argument("--max-n", type=_nonneg, default=6)
    b.add_argument("--max-r", type=_nonneg, default=2)
    b.add_argument("--max-l", type=_nonneg, default=2)
    b.add_argument("--format", choices=["json", "text"], default="text")
    b.set_defaults(func=cmd_bijection)

    tc = sub.add_parser("telescope", help="check a telescoping certificate")
    tc.add_argument("--cert", required=True, help="R1..R5 or all")
    tc.add_argument("--max-m", type=_nonneg, default=50)
    tc.add_argument("--summand", help="override the paired summand, e.g. F4")
    tc.add_argument("--format", choices=["json", "text"], default="text")
    tc.set_defaults(func=cmd_telescope)

    tr = sub.add_parser("transform", help="minor-sum transform of a triangle")
    tr.add_argument("--source", choices=["pascal", "shapiro", "narayana", "motzkin"], required=True)
    tr.add_argument("--m", type=_nonneg, default=1)
    tr.add_argument("--r", type=int, default=0)
    tr.add_argument("--l", type=_nonneg, default=1)
    tr.add_argument("--p", type=_nonneg, default=1)
    tr.add_argument("--rows", type=_nonneg, default=5)
    tr.add_argument("--at", type=_point)
    tr.add_argument("--format", choices=["json", "csv", "text"], default="text")
    tr.set_defaults(func=cmd_transform)

    s = sub.add_parser("series-check", help="generating-function checks")
    s.add_argument("--order", type=_nonneg, default=24)
    s.add_argument("--k-max", type=_nonneg)
    s.add_argument("--alpha-max", type=_nonneg, default=12)
    s.add_argument("--format", choices=["json", "text"], default="text")
    s.set_defaults(func=cmd_series)

    for sp in (t, v, b, tc, tr, s):
        sp.add_argument("--output", "-o", help="write the report to this file")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.output)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"mf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
