"""
Named Riordan arrays and parameterized families, plus the golden corpus of
displayed matrices they are checked against.

Entries are defined by generating-function expressions and built at any
requested precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .errors import CatalogError, ParseError
from .expr import evaluate
from .riordan import RiordanPair

DEFAULT_PREC = 16
DEFAULT_R_SAMPLES = (-2, -1, 0, 1, 2, 3)


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    g_expr: str
    f_expr: str
    site: str
    known_facts: tuple = ()
    prec: int = DEFAULT_PREC
    r: int | None = None

    @property
    def pair(self) -> RiordanPair:
        return build_pair(self.g_expr, self.f_expr, self.prec, self.r)

    def at(self, prec: int) -> RiordanPair:
        return build_pair(self.g_expr, self.f_expr, prec, self.r)

    def triangle(self, N: int):
        return self.at(max(N, 2)).triangle(N)


def build_pair(g_expr: str, f_expr: str, prec: int, r=None) -> RiordanPair:
    return RiordanPair(evaluate(g_expr, prec, r), evaluate(f_expr, prec, r))


# name -> (g, f, where it is shown, ids of the checks that exercise it)
_CATALOG = {
    "pascal": ("1/(1-x)", "x/(1-x)", "binomial matrix B",
               ("pascal.binomial_entries", "pascal.subgroups")),
    "catalan_1_xc": ("1", "x*c", "Catalan matrix (1, x c(x))",
                     ("golden.catalan_1_xc",)),
    "catalan_c_xc": ("c", "x*c", "Catalan matrix (c(x), x c(x))",
                     ("catalan_matrices.a_sequences",)),
    "catalan_c2_xc2": ("c^2", "x*c^2", "Catalan matrix (c(x)^2, x c(x)^2)",
                       ("golden.catalan_c2_xc2", "sec5_main.catalan_matrix",
                        "catalan_c2_xc2.row_sum_hankel")),
    "catalan_1_xc2": ("1", "x*c^2", "Catalan matrix (1, x c(x)^2) = (1, c(x) - 1)",
                      ("catalan_matrices.a_sequences",)),
    "ex3_main": ("(1+2*x)/(1+x)", "-x/(1+x)", "first worked example, inverse of ex3_inv",
                 ("golden.ex3_main", "ex3_main.halves", "ex3_main.general_terms",
                  "ex3_main.square_diagonal_sums", "ex3_main.square_gould",
                  "ex3_main.square_conjugation", "ex3_main.inverse")),
    "ex3_inv": ("1/(1-x)", "-x/(1+x)", "inverse of the first worked example",
                ("golden.ex3_inv", "ex3_inv.factorizations", "ex3_inv.central_coefficients",
                 "ex3_inv.central_hankel", "ex3_inv.general_terms")),
    "ex3b": ("1-2*x", "x/(1-x)", "worked example (1-2x, x/(1-x))",
             ("golden.ex3b", "ex3b.halves", "ex3b.first_column_hankel")),
    "m1": ("(1+2*x)/(1+x)", "x/(1+x)", "M1 = B^-1 ((1+x)/(1-x), x)",
           ("golden.m1", "m1_m2.products", "m1.halves", "m1_m2.general_terms")),
    "m2": ("(1-2*x)/(1-x)", "x/(1-x)", "M2 = B ((1-x)/(1+x), x)",
           ("golden.m2", "m1_m2.products", "m2.halves", "m1_m2.general_terms")),
    "sec5_main": ("1-x^2", "x*(1+x)^2", "array whose vertical half is (c(x)^2, x c(x)^2)",
                  ("golden.sec5_main", "sec5_main.catalan_matrix", "sec5_main.row_sum_hankel")),
    "sec5_assoc": ("1", "x*(1+x)^2", "associated array (1, x(1+x)^2)",
                   ("golden.sec5_assoc", "sec5_assoc.halves", "sec5_assoc.general_terms",
                    "sec5.row_sums_4n")),
    "sec5_plus": ("1+x", "x*(1+x)^2", "array (1+x, x(1+x)^2) with row sums 4^n in its vertical half",
                  ("sec5_plus.vertical_half", "sec5.row_sums_4n")),
    "special_2s": ("(1+x)/(1-x)", "x", "matrix ((1+x)/(1-x), x)",
                   ("golden.special_2s", "m1_m2.products", "ex3_main.square_conjugation")),
    "special_2s_inv": ("(1-x)/(1+x)", "x", "matrix ((1-x)/(1+x), x)",
                       ("golden.special_2s_inv", "m1_m2.products")),
}


def names() -> list:
    return list(_CATALOG)


def named(name: str, prec: int = DEFAULT_PREC) -> GalleryEntry:
    try:
        g, f, site, facts = _CATALOG[name]
    except KeyError:
        raise CatalogError(
            f"unknown gallery name {name!r}; available: {', '.join(_CATALOG)}") from None
    return GalleryEntry(name, g, f, site, facts, prec)


def param_family(kind: str, r: int, prec: int = DEFAULT_PREC) -> GalleryEntry:
    """(1/(1-rx), x/(1-x)) for kind 'reciprocal', (1-rx, x/(1-x)) for 'linear'."""
    if prec < 2:
        raise ValueError("family members need precision at least 2")
    if kind == "reciprocal":
        g = "1/(1-r*x)"
    elif kind == "linear":
        g = "1-r*x"
    else:
        raise CatalogError(f"unknown family {kind!r}; choose 'reciprocal' or 'linear'")
    facts = (f"{kind}_family.vertical_half", f"{kind}_family.hankel")
    return GalleryEntry(f"{kind}[r={r}]", g, "x/(1-x)", f"family {g}, x/(1-x)", facts, prec, r)


# -- golden corpus -------------------------------------------------------

@dataclass(frozen=True)
class GoldenMatrix:
    name: str
    header: str
    rows: tuple = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.rows)


def parse_golden(text: str, name: str = "<text>") -> GoldenMatrix:
    header = ""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            if not header:
                header = line[1:].strip()
            continue
        try:
            rows.append(tuple(Fraction(int(v)) for v in line.split(",")))
        except ValueError:
            raise ParseError(f"{name}: line {lineno}: expected comma-separated integers") from None
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ParseError(f"{name}: golden matrix must be square and nonempty")
    return GoldenMatrix(name, header, tuple(rows))


def format_golden(header: str, rows: Sequence[Sequence]) -> str:
    lines = [f"# {header}"] + [",".join(str(v) for v in r) for r in rows]
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def golden_corpus() -> dict:
    """All stored displays keyed by name, in file order."""
    out = {}
    folder = resources.files("catalan_halves") / "data" / "golden"
    for item in sorted(folder.iterdir(), key=lambda p: p.name):
        if not item.name.endswith(".txt"):
            continue
        name = item.name[3:-4]  # strip 'NN_' prefix and extension
        out[name] = parse_golden(item.read_text(), name)
    return out
