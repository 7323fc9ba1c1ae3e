"""Command-line interface.

Exit codes: 0 ok, 1 check failure, 2 usage or parse error, 3 domain error,
4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import gallery, oeis_catalog, paper_suite
from .errors import CatalogError, ParseError, RiordanError
from .expr import evaluate
from .halves import halves_pair, horizontal_half_matrix, source_rows, vertical_half_matrix
from .hankel import hankel_transform
from .riordan import RiordanPair, Triangle
from .square_array import conjugate_binomial, diagonal_sums, mod_reduce, square_from_triangle

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4


class _Usage(Exception):
    """Bad flag combination discovered after argparse accepted the line."""


# -- formatting -----------------------------------------------------------

def fmt(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _require_integral(rows, what: str):
    for n, row in enumerate(rows):
        for k, v in enumerate(row):
            if Fraction(v).denominator != 1:
                raise _NonIntegral(f"{what} entry ({n},{k}) = {fmt(v)} is not an integer")


class _NonIntegral(RiordanError):
    pass


def render_rows(rows: Sequence[Sequence], style: str, lower: bool = True) -> str:
    """Rows of numbers as an aligned table or CSV; ``lower`` trims above-diagonal zeros."""
    cells = [[fmt(v) for v in (row[: n + 1] if lower else row)] for n, row in enumerate(rows)]
    if style == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(cells)
        return buf.getvalue().rstrip("\n")
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def render_seq(values: Sequence, style: str) -> str:
    if style == "json":
        return json.dumps([fmt(v) for v in values])
    sep = "," if style == "csv" else ", "
    return sep.join(fmt(v) for v in values)


def triangle_output(pair: RiordanPair | None, rows, style: str, N: int, extra=None) -> str:
    if style == "json":
        obj = {}
        if pair is not None:
            obj["g"] = [fmt(pair.g[i]) for i in range(min(N, pair.prec))]
            obj["f"] = [fmt(pair.f[i]) for i in range(min(N, pair.prec))]
        obj["rows"] = [[fmt(v) for v in row[: n + 1]] for n, row in enumerate(rows)]
        if extra:
            obj.update(extra)
        return json.dumps(obj)
    out = []
    if pair is not None and style == "table":
        n = min(N, pair.prec)
        out.append("g: " + render_seq([pair.g[i] for i in range(n)], "table"))
        out.append("f: " + render_seq([pair.f[i] for i in range(n)], "table"))
    if extra and style == "table":
        out += [f"{k}: {v}" for k, v in extra.items()]
    out.append(render_rows(rows, style))
    return "\n".join(out)


# -- pair construction -----------------------------------------------------

def _pair_from(args, prec: int, suffix: str = "") -> RiordanPair:
    name = getattr(args, "name" + suffix, None)
    g = getattr(args, "g" + suffix, None)
    f = getattr(args, "f" + suffix, None)
    if name:
        if g or f:
            raise _Usage(f"--name{suffix} cannot be combined with --g{suffix}/--f{suffix}")
        return gallery.named(name).at(prec)
    if not (g and f):
        raise _Usage(f"supply --g{suffix} and --f{suffix}, or --name{suffix}")
    return RiordanPair(evaluate(g, prec, args.r), evaluate(f, prec, args.r))


# closed forms recognized in half output, besides the gallery itself
_CATALAN_FORMS = [
    (g, f"{sign}x*c^{b}" if b > 1 else f"{sign}x*c") for g in ("1", "c", "c^2") for b in (1, 2, 3, 4) for sign in ("", "-")
]


def detect_form(pair: RiordanPair, upto: int) -> str | None:
    upto = min(upto, pair.prec)
    for name in gallery.names():
        if gallery.named(name).at(upto).agrees(pair, upto):
            return name
    for g, f in _CATALAN_FORMS:
        if gallery.build_pair(g, f, upto).agrees(pair, upto):
            return f"({g}, {f})"
    return None


# -- subcommands -------------------------------------------------------------

def cmd_show(args) -> str:
    N = args.rows
    pair = _pair_from(args, N)
    t = pair.triangle(N)
    return _emit(args, pair, t, N)


def _emit(args, pair, t: Triangle, N: int, extra=None) -> str:
    rows = t.dense()
    if args.require_integer:
        _require_integral(rows, "triangle")
    return triangle_output(pair, rows, args.format, N, extra)


def _half(args, which: str) -> str:
    N = args.rows
    # index extraction needs 2N-1 source rows; the closed form loses one coefficient
    prec = max(source_rows(N), N + 1)
    src = _pair_from(args, prec)
    t = src.triangle(source_rows(N))
    half_t = (vertical_half_matrix if which == "v" else horizontal_half_matrix)(t, N)
    V, H = halves_pair(src)
    closed = V if which == "v" else H
    form = detect_form(closed, N)
    extra = {"closed form": form} if form else None
    return _emit(args, closed.truncate(min(N, closed.prec)), half_t, N, extra)


def cmd_vhalf(args) -> str:
    return _half(args, "v")


def cmd_hhalf(args) -> str:
    return _half(args, "h")


def cmd_inverse(args) -> str:
    N = args.rows
    inv = _pair_from(args, N).inverse()
    return _emit(args, inv, inv.triangle(N), N)


def cmd_multiply(args) -> str:
    N = args.rows
    prod = _pair_from(args, N, "1") * _pair_from(args, N, "2")
    return _emit(args, prod, prod.triangle(N), N)


def _parse_seq(text: str) -> list:
    try:
        return [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"could not read sequence {text!r}; expected comma-separated numbers") from None


def cmd_hankel(args) -> str:
    seq = _parse_seq(args.seq)
    n = args.n if args.n is not None else (len(seq) - 1) // 2
    return render_seq(hankel_transform(seq, n), args.format)


def cmd_square(args) -> str:
    N = args.size
    pair = _pair_from(args, source_rows(N))
    s = square_from_triangle(pair.triangle(source_rows(N)), N)
    if args.conjugate:
        s = conjugate_binomial(s)
    if args.mod is not None:
        s = mod_reduce(s, args.mod)
    if args.diag:
        return render_seq(diagonal_sums(s), args.format)
    rows = s.dense()
    if args.require_integer:
        _require_integral(rows, "square array")
    if args.format == "json":
        return json.dumps({"rows": [[fmt(v) for v in r] for r in rows]})
    return render_rows(rows, args.format, lower=False)


def _parse_samples(text: str) -> tuple:
    if not text.strip():
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ParseError(f"--r-samples expects comma-separated integers, got {text!r}") from None


def cmd_check(args):
    samples = _parse_samples(args.r_samples)
    # open the report first so a bad path fails before the long run
    sink = open(args.report, "w") if args.report else None
    try:
        report = paper_suite.run_checks(args.rows, samples, max_workers=args.jobs)
        if sink:
            sink.write((report.to_json() if args.report.endswith(".json") else report.to_text()) + "\n")
    finally:
        if sink:
            sink.close()
    out = report.to_json() if args.format == "json" else report.to_text()
    return out, (EXIT_OK if report.ok else EXIT_CHECK)


def cmd_oeis(args) -> str:
    cat = oeis_catalog.load_default(args.catalog)
    hits = oeis_catalog.lookup(cat, _parse_seq(args.seq), args.max_shift)
    if args.format == "json":
        return json.dumps([{"anumber": a, "shift": s} for a, s in hits])
    if not hits:
        return f"no match among {len(cat)} sequences"
    sep = "," if args.format == "csv" else " "
    return "\n".join(f"{a}{sep}shift={s}" if sep == " " else f"{a},{s}" for a, s in hits)


def cmd_explore(args) -> str:
    return render_seq(paper_suite.explore_a258431_sum(args.n), args.format)


# -- parser --------------------------------------------------------------------

def _add_pair(p, suffix: str = "", label: str = "the array"):
    p.add_argument(f"--g{suffix}", help=f"g(x) of {label}, e.g. '(1+2*x)/(1+x)'")
    p.add_argument(f"--f{suffix}", help=f"f(x) of {label}, e.g. 'x*c'")
    p.add_argument(f"--name{suffix}", help=f"gallery name for {label} instead of --g/--f")


def _add_common(p):
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--r", type=int, default=None, help="value for the parameter r")
    p.add_argument("--require-integer", action="store_true",
                   help="fail if any printed entry is not an integer")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="riordan",
        description="Exact Riordan arrays, their halves and Hankel transforms.",
        epilog=f"OEIS lookups read ${oeis_catalog.ENV_VAR} when --catalog is not given.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("show", cmd_show, "print the triangle of (g, f)"),
        ("vhalf", cmd_vhalf, "vertical half t[2n-k][n]"),
        ("hhalf", cmd_hhalf, "horizontal half t[2n][n+k]"),
        ("inverse", cmd_inverse, "inverse array"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_pair(p)
        p.add_argument("--rows", type=_positive, default=8)
        _add_common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("multiply", help="product of two arrays")
    _add_pair(p, "1", "the left factor")
    _add_pair(p, "2", "the right factor")
    p.add_argument("--rows", type=_positive, default=8)
    _add_common(p)
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("hankel", help="Hankel transform of a sequence prefix")
    p.add_argument("--seq", required=True)
    p.add_argument("--n", type=int, default=None, help="last index (default: as far as the prefix allows)")
    _add_common(p)
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("square", help="square array s[n][k] = t[n+k][k]")
    _add_pair(p)
    p.add_argument("--size", type=_positive, default=8)
    p.add_argument("--mod", type=int, default=None)
    p.add_argument("--diag", action="store_true", help="print antidiagonal sums")
    p.add_argument("--conjugate", action="store_true", help="apply B S B^T first")
    _add_common(p)
    p.set_defaults(func=cmd_square)

    p = sub.add_parser("check", help="run the claim catalog")
    p.add_argument("--rows", type=int, default=10)
    p.add_argument("--r-samples", default=",".join(map(str, gallery.DEFAULT_R_SAMPLES)))
    p.add_argument("--report", default=None, help="write the report here (.json for JSON)")
    p.add_argument("--jobs", type=_positive, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oeis", help="look a prefix up in a local stripped file")
    p.add_argument("--seq", required=True)
    p.add_argument("--catalog", default=None)
    p.add_argument("--max-shift", type=int, default=3)
    _add_common(p)
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("explore", help="double sum sum_k sum_j binom(2(n-j),n-j) binom(2j,j-k)")
    p.add_argument("--n", type=int, default=10)
    _add_common(p)
    p.set_defaults(func=cmd_explore)
    return ap


# flags whose values may legitimately start with '-' (expressions, number lists)
_VALUE_FLAGS = {"--g", "--f", "--g1", "--f1", "--g2", "--f2", "--seq", "--r-samples",
                "--r", "--n", "--mod"}


def _glue_dash_values(argv: list) -> list:
    """argparse reads '--f -x/(1+x)' as two flags; rewrite it as '--f=-x/(1+x)'."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_dash_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except (_Usage, ParseError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RiordanError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
