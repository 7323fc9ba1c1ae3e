"""Offline sequence identification against a file in OEIS "stripped" format.

Each data line reads ``A000108 ,1,1,2,5,14,42,`` ; lines starting with
``#`` are comments.  A small snapshot ships with the package; set
``RIORDAN_OEIS_PATH`` (or pass a path) to use a full download.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

from .errors import DomainError, ParseError

ENV_VAR = "RIORDAN_OEIS_PATH"
MIN_QUERY = 5

_LINE = re.compile(r"^(A\d{6})\s+,(.*)$")


@dataclass(frozen=True)
class Catalog:
    entries: Mapping[str, tuple]

    def __len__(self):
        return len(self.entries)

    def __contains__(self, anum):
        return anum in self.entries


def parse(text: str, source: str = "<text>") -> Catalog:
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE.match(line)
        if not m:
            raise ParseError(f"{source}: line {lineno}: expected 'A###### ,v1,v2,...'")
        anum, body = m.groups()
        try:
            terms = tuple(int(v) for v in body.strip(",").split(",") if v.strip())
        except ValueError:
            raise ParseError(f"{source}: line {lineno}: non-integer term") from None
        if not terms:
            raise ParseError(f"{source}: line {lineno}: {anum} has no terms")
        if anum in entries:
            raise ParseError(f"{source}: line {lineno}: duplicate {anum}")
        entries[anum] = terms
    return Catalog(entries)


def load(path: str | os.PathLike) -> Catalog:
    path = Path(path)
    return parse(path.read_text(), str(path))


def load_default(path: str | os.PathLike | None = None) -> Catalog:
    """Explicit path, else $RIORDAN_OEIS_PATH, else the bundled snapshot."""
    path = path or os.environ.get(ENV_VAR)
    if path:
        return load(path)
    text = (resources.files("catalan_halves") / "data" / "oeis_fixture.txt").read_text()
    return parse(text, "bundled snapshot")


def _as_ints(prefix: Sequence) -> tuple:
    out = []
    for i, v in enumerate(prefix):
        q = Fraction(v)
        if q.denominator != 1:
            raise DomainError(f"term {i} = {q} is not an integer")
        out.append(q.numerator)
    return tuple(out)


def lookup(catalog: Catalog, prefix: Sequence, max_shift: int = 3) -> list:
    """(A-number, shift) pairs whose terms contain ``prefix`` starting at ``shift``."""
    query = _as_ints(prefix)
    if len(query) < MIN_QUERY:
        raise DomainError(f"query needs at least {MIN_QUERY} terms, got {len(query)}")
    if not any(query):
        raise DomainError("an all-zero query matches too much; supply a longer or nonzero prefix")
    hits = []
    n = len(query)
    for anum, terms in catalog.entries.items():
        for shift in range(max_shift + 1):
            if terms[shift: shift + n] == query:
                hits.append((anum, shift))
                break
    return sorted(hits, key=lambda h: (h[1], h[0]))
