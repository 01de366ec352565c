"""The counting board: augmented tableaux over an exact ring.

Rows are equations and columns are unknowns followed by the right-hand side
(the historical board ran equations down columns; the rotated layout is used
throughout).  Tableaux are immutable; every elimination step builds a new one.

File format::

    # optional comments and blank lines
    n m
    a11 a12 ... a1m
    ...
    an1 an2 ... anm
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from typing import Sequence

from .errors import DimensionMismatch, ParseError
from .ring import POLY, ZZ, MultiPoly, Ring

_HEADER = re.compile(r"^(\d+) (\d+)$")
_INT = re.compile(r"^[+-]?\d+$")


@dataclass(frozen=True)
class Tableau:
    rows: tuple
    ring: Ring = ZZ
    step: int = 1
    rhs_cols: int = 0

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or not rows[0]:
            raise DimensionMismatch("tableau must have at least one row and column")
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise DimensionMismatch("rows have different lengths")
        if m < len(rows):
            raise DimensionMismatch(f"{len(rows)}x{m} tableau has fewer columns than rows")
        if self.rhs_cols not in (0, 1) or (self.rhs_cols and m != len(rows) + 1):
            raise DimensionMismatch("rhs_cols must be 0, or 1 with m = n + 1")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def next(self, rows, step=None) -> Tableau:
        """A successor tableau with new entries; step defaults to ``step + 1``."""
        return replace(self, rows=rows, step=self.step + 1 if step is None else step)

    def over(self, ring: Ring) -> Tableau:
        return replace(self, rows=[[ring.coerce(x) for x in r] for r in self.rows], ring=ring)

    def diagonal(self) -> list:
        return [self.rows[i][i] for i in range(self.n)]

    def leading_block(self) -> tuple:
        return tuple(r[: self.n] for r in self.rows)

    def is_upper_triangular(self) -> bool:
        z = self.ring.is_zero
        return all(z(self.rows[i][j]) for i in range(self.n) for j in range(min(i, self.m)))

    def strings(self) -> tuple:
        return tuple(tuple(self.ring.to_str(x) for x in r) for r in self.rows)

    def entry_bits(self) -> int:
        return max(self.ring.bits(x) for r in self.rows for x in r)


def parse_tableau(text: str) -> Tableau:
    header = None
    rows = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            match = _HEADER.match(line)
            if not match:
                raise ParseError(f"expected header 'n m', got {line!r}", lineno, 1)
            header = (int(match.group(1)), int(match.group(2)))
            n, m = header
            if n < 1 or m < n:
                raise ParseError(f"need 1 <= n <= m, got n={n} m={m}", lineno, 1)
            continue
        if len(rows) == header[0]:
            raise ParseError(f"more than {header[0]} rows", lineno, 1)
        row = []
        for match in re.finditer(r"\S+", raw):
            tok = match.group()
            if not _INT.match(tok):
                raise ParseError(f"not an integer: {tok!r}", lineno, match.start() + 1)
            row.append(int(tok))
        if len(row) != header[1]:
            raise ParseError(f"row {len(rows) + 1} has {len(row)} of {header[1]} entries",
                             lineno, len(raw) + 1)
        rows.append(row)
    if header is None:
        raise ParseError("missing header line")
    if len(rows) != header[0]:
        raise ParseError(f"expected {header[0]} rows, found {len(rows)}")
    n, m = header
    return Tableau(rows, ZZ, 1, 1 if m == n + 1 else 0)


def from_system(coeffs: Sequence[Sequence[int]], rhs: Sequence[int], ring: Ring = ZZ) -> Tableau:
    n = len(coeffs)
    if len(rhs) != n or any(len(r) != n for r in coeffs):
        raise DimensionMismatch(f"need an n x n coefficient grid and n right-hand sides; "
                                f"got {n} rows and {len(rhs)} right-hand sides")
    rows = [[ring.coerce(x) for x in r] + [ring.coerce(b)] for r, b in zip(coeffs, rhs)]
    return Tableau(rows, ring, 1, 1)


def render(t: Tableau, fmt: str = "board") -> str:
    cells = t.strings()
    if fmt == "board" or fmt == "file":
        widths = [max(len(r[j]) for r in cells) for j in range(t.m)]
        board = "\n".join(" ".join(s.rjust(w) for s, w in zip(r, widths)) for r in cells)
        return board if fmt == "board" else f"{t.n} {t.m}\n{board}\n"
    if fmt == "json":
        return json.dumps({"step": t.step, "n": t.n, "m": t.m, "ring": t.ring.name,
                           "rhs_cols": t.rhs_cols, "tableau": [list(r) for r in cells]})
    raise ValueError(f"unknown format {fmt!r}")


def max_bit_length(t: Tableau) -> int:
    return max(abs(x).bit_length() for r in t.rows for x in r)


def generic_tableau(n: int, m: int) -> Tableau:
    """Tableau whose (i, j) entry is the indeterminate v[i,j] (1-based)."""
    if n < 1 or m < n:
        raise DimensionMismatch(f"need 1 <= n <= m, got n={n} m={m}")
    rows = [[MultiPoly.variable(i, j) for j in range(1, m + 1)] for i in range(1, n + 1)]
    return Tableau(rows, POLY, 1, 1 if m == n + 1 else 0)
