"""Command-line front end.

Exit codes: 0 success, 1 usage/parse error (or a failed verification),
2 mathematical precondition violation.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import ktheory as kt
from .linalg import IntMatrix
from .ranks import METHODS, a_n, write_bfile
from .table1 import TABLE1

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2


class MatrixFormatError(ValueError):
    pass


def parse_matrix_text(text: str) -> IntMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    try:
        n = int(lines[0])
        rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise MatrixFormatError(f"non-integer entry: {exc}") from None
    return _checked(n, rows)


def parse_matrix_json(text: str) -> IntMatrix:
    try:
        obj = json.loads(text)
        n, rows = int(obj["n"]), obj["rows"]
        rows = [[int(x) for x in r] for r in rows]
    except (ValueError, KeyError, TypeError) as exc:
        raise MatrixFormatError(f"bad JSON matrix: {exc}") from None
    return _checked(n, rows)


def _checked(n: int, rows) -> IntMatrix:
    if n < 1:
        raise MatrixFormatError("n must be positive")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise MatrixFormatError(f"expected {n} rows of {n} integers")
    return IntMatrix.from_rows(rows)


def load_matrix(path, fmt: str | None = None) -> IntMatrix:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MatrixFormatError(str(exc)) from None
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "text"
    return parse_matrix_json(text) if fmt == "json" else parse_matrix_text(text)


def format_matrix_text(m: IntMatrix) -> str:
    return f"{m.nrows}\n" + "".join(" ".join(map(str, r)) + "\n" for r in m.to_rows())


class ReportCache:
    """On-disk store of K-theory reports keyed by a hash of the matrix."""

    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def key(m: IntMatrix) -> str:
        blob = json.dumps({"n": m.nrows, "rows": m.to_rows()}, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def path(self, m: IntMatrix) -> Path:
        return self.directory / f"{self.key(m)}.json"

    def get(self, m: IntMatrix):
        p = self.path(m)
        if not p.exists():
            return None
        return kt.KTheoryReport.from_json(json.loads(p.read_text()))

    def put(self, m: IntMatrix, report) -> None:
        self.path(m).write_text(json.dumps(report.to_json()))


def _report(auto: kt.TorusAutomorphism, cache_dir) -> kt.KTheoryReport:
    cache = ReportCache(cache_dir) if cache_dir else None
    if cache:
        hit = cache.get(auto.matrix)
        if hit is not None:
            return hit
    report = kt.k_groups(auto)
    if cache:
        cache.put(auto.matrix, report)
    return report


def _emit(args, text: str, obj) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def _automorphism(args) -> kt.TorusAutomorphism:
    if getattr(args, "anzai", None):
        return kt.anzai_matrix(args.anzai)
    if not args.matrix:
        raise MatrixFormatError("one of --matrix or --anzai is required")
    return kt.TorusAutomorphism.from_matrix(load_matrix(args.matrix, args.format))


# ---------------------------------------------------------------------------
# subcommands


def cmd_kgroups(args) -> int:
    report = _report(_automorphism(args), args.cache)
    _emit(args, report.render_text(), report.to_json())
    return EXIT_OK


def cmd_dn(args) -> int:
    if args.n < 1:
        raise MatrixFormatError("--n must be at least 1")
    report = _report(kt.anzai_matrix(args.n + 1), args.cache)
    _emit(args, report.render_text(), report.to_json())
    return EXIT_OK


def cmd_verify_table1(args) -> int:
    if not 1 <= args.max_n <= 12:
        raise MatrixFormatError("--max-n must be between 1 and 12")
    lines = [f"{'n':>3}  {'status':6}  K0 | K1"]
    rows, all_ok = [], True
    for n in range(1, args.max_n + 1):
        rep = kt.k_groups(kt.anzai_matrix(n))
        exp0, exp1 = TABLE1[n]
        ok0, ok1 = rep.k0 == exp0, rep.k1 == exp1
        ok = ok0 and ok1
        all_ok &= ok
        lines.append(f"{n:>3}  {'PASS' if ok else 'FAIL':6}  {rep.k0} | {rep.k1}")
        for label, good, got, exp in (("K0", ok0, rep.k0, exp0), ("K1", ok1, rep.k1, exp1)):
            if not good:
                lines.append(f"       {label} computed: {got}")
                lines.append(f"       {label} expected: {exp}")
        rows.append({"n": n, "pass": ok, "K0": rep.k0.to_json(), "K1": rep.k1.to_json(),
                     "expected_K0": exp0.to_json(), "expected_K1": exp1.to_json()})
    _emit(args, "\n".join(lines) + "\n", {"rows": rows, "all_pass": all_ok})
    return EXIT_OK if all_ok else EXIT_USAGE


def cmd_rank_seq(args) -> int:
    if args.max_n < 1:
        raise MatrixFormatError("--max-n must be at least 1")
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in METHODS:
            raise MatrixFormatError(f"unknown method {m!r}; choose from {', '.join(METHODS)}")
    table = []
    for n in range(1, args.max_n + 1):
        values = {}
        for m in methods:
            if m == "matrix" and n > args.matrix_cap:
                values[m] = None
            else:
                values[m] = a_n(n, m).value
        present = {v for v in values.values() if v is not None}
        table.append({"n": n, "values": values, "agree": len(present) <= 1})
    width = max(12, len(str(max((v for r in table for v in r["values"].values() if v),
                                default=0))) + 2)
    lines = [f"{'n':>4}" + "".join(f"{m:>{max(width, len(m) + 2)}}" for m in methods) + "  status"]
    for row in table:
        cells = "".join(
            f"{'skipped' if row['values'][m] is None else row['values'][m]:>{max(width, len(m) + 2)}}"
            for m in methods)
        lines.append(f"{row['n']:>4}{cells}  {'AGREE' if row['agree'] else 'DISAGREE'}")
    if args.bfile:
        pairs = []
        for row in table:
            vals = [v for v in row["values"].values() if v is not None]
            if vals and row["agree"]:
                pairs.append((row["n"], vals[0]))
        write_bfile(args.bfile, pairs)
    _emit(args, "\n".join(lines) + "\n", {"methods": methods, "rows": table})
    return EXIT_OK if all(r["agree"] for r in table) else EXIT_USAGE


def cmd_duality(args) -> int:
    rows = kt.poincare_check(_automorphism(args))
    lines = [f"{'r':>3}  {'n-r':>3}  {'equal':5}  coker_r | coker_(n-r)"]
    n = len(rows) - 1
    for row in rows:
        lines.append(f"{row.r:>3}  {n - row.r:>3}  {'yes' if row.equal else 'NO':5}  "
                     f"{row.coker_r} | {row.coker_dual}")
    obj = {"n": n, "rows": [{"r": r.r, "coker_r": r.coker_r.to_json(),
                             "coker_n_minus_r": r.coker_dual.to_json(), "equal": r.equal}
                            for r in rows],
           "all_equal": all(r.equal for r in rows)}
    _emit(args, "\n".join(lines) + "\n", obj)
    return EXIT_OK


def cmd_search_ascending(args) -> int:
    if args.n < 2 or args.k_max < 1:
        raise MatrixFormatError("need --n >= 2 and --k-max >= 1")
    result = kt.search_ascending(args.n, args.k_max)
    lines = [f"ascending Furstenberg matrices, n = {args.n}, k_max = {args.k_max}"]
    for ks, (g0, g1) in sorted(result.groups.items()):
        lines.append(f"  k = {ks}:  K0 = {g0}   K1 = {g1}")
    collisions = result.collisions
    lines.append(f"{len(collisions)} collision group(s)")
    for c in collisions:
        lines.append("  " + ", ".join(map(str, c)))
    _emit(args, "\n".join(lines) + "\n", result.to_json())
    return EXIT_OK


def cmd_trace_report(args) -> int:
    theta = kt.ThetaInterval.parse(args.theta_lo, args.theta_hi)
    rep = kt.trace_range_report(_automorphism(args), theta)
    for w in rep["warnings"]:
        print(f"warning: {w}", file=sys.stderr)
    _emit(args, kt.render_trace_report(rep), rep)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torus-ktheory",
        description="K-groups of crossed products C(T^n) x Z, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_args(p):
        p.add_argument("--matrix", metavar="PATH", help="matrix file")
        p.add_argument("--format", choices=("text", "json"),
                       help="matrix file format (default: by extension)")
        p.add_argument("--anzai", type=int, metavar="N", help="use the n x n Anzai matrix")

    p = sub.add_parser("kgroups", help="K0 and K1 from an integer matrix")
    matrix_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--cache", metavar="DIR")
    p.set_defaults(func=cmd_kgroups)

    p = sub.add_parser("dn", help="K-groups of C*(D_n) via the Anzai matrix of size n+1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--cache", metavar="DIR")
    p.set_defaults(func=cmd_dn)

    p = sub.add_parser("verify-table1", help="recompute the published table for n <= 12")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_table1)

    p = sub.add_parser("rank-seq", help="the rank sequence by several methods")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--methods", default=",".join(METHODS),
                   help=f"comma list from {','.join(METHODS)}")
    p.add_argument("--matrix-cap", type=int, default=14,
                   help="largest n for the matrix method (default 14)")
    p.add_argument("--bfile", metavar="PATH", help="write an OEIS-style b-file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rank_seq)

    p = sub.add_parser("duality", help="compare coker in degrees r and n-r")
    matrix_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("search-ascending", help="K-theory collisions among ascending matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search_ascending)

    p = sub.add_parser("trace-report", help="trace range and positive cone of K0")
    matrix_args(p)
    p.add_argument("--theta-lo", required=True, help="rational lower bound, e.g. 414213/1000000")
    p.add_argument("--theta-hi", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trace_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except kt.PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
