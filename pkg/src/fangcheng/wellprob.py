"""Cyclic band systems with a shared right-hand side (the "well problem" family).

For n = 4 the tableau is::

    a1  1  0  0 | b
     0 a2  1  0 | b
     0  0 a3  1 | b
     1  0  0 a4 | b

The right-hand side b is treated as known: either given, or posited as
det(A).  Parametric solving with b left free is not supported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .detkit import COFACTOR_LIMIT, det_oracle, det_via_chio
from .diagonalize import Solution, hart_backward
from .eliminate import PivotPolicy, PivotStrategy, forward_eliminate
from .errors import RankDeficient, TooSmall, UnsupportedIndeterminate
from .tableau import Tableau, from_system


@dataclass(frozen=True)
class WellSystem:
    coeffs: tuple[int, ...]
    b: int | None = None
    posited: bool = False

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for i, a in enumerate(self.coeffs):
            rows[i][i] = a
            rows[i][(i + 1) % n] += 1
        return tuple(tuple(r) for r in rows)

    @property
    def resolved(self) -> bool:
        return self.b is not None

    def tableau(self) -> Tableau:
        if self.b is None:
            raise UnsupportedIndeterminate("b is unresolved; posit it with resolve() or give a value")
        return from_system(self.matrix, [self.b] * self.n)

    def resolve(self) -> WellSystem:
        """Same system with b set to det(A) unless it was given."""
        if self.b is not None:
            return self
        return replace(self, b=posited_b(self), posited=True)


def build_well_system(coeffs, b: int | None = None) -> WellSystem:
    coeffs = tuple(int(a) for a in coeffs)
    if len(coeffs) < 2:
        raise TooSmall("a well system needs at least two equations")
    return WellSystem(coeffs, b, False)


def closed_form_det(coeffs) -> int:
    n = len(coeffs)
    return math.prod(coeffs) + (-1) ** (n + 1)


def posited_b(ws: WellSystem) -> int:
    if ws.n <= COFACTOR_LIMIT:
        return det_oracle(ws.matrix, "cofactor")
    return det_via_chio(ws.matrix, PivotPolicy.SWAP)


@dataclass(frozen=True)
class WellDiagnostics:
    b: int
    posited: bool
    final_pivot: int
    det: int
    closed_form: int
    pivot_equals_det: bool
    hart_diagonal: int

    @property
    def pivot_over_det(self) -> Fraction | None:
        return Fraction(self.final_pivot, self.det) if self.det else None


def solve_well(ws: WellSystem, policy: PivotPolicy = PivotPolicy.STRICT,
               parametric: bool = False) -> tuple[Solution, WellDiagnostics]:
    """Nine Chapters forward phase followed by the integer backward phase."""
    if parametric:
        raise UnsupportedIndeterminate(
            "b is only ever posited as det(A); parametric solutions are not supported")
    ws = ws.resolve()
    det = posited_b(ws) if not ws.posited else ws.b
    echelon, trace = forward_eliminate(ws.tableau(), PivotStrategy.NINE_CHAPTERS, policy)
    pivot = echelon.rows[-1][-2]
    if pivot == 0:
        raise RankDeficient(ws.n)
    diag, _ = hart_backward(echelon)
    diagnostics = WellDiagnostics(
        b=ws.b,
        posited=ws.posited,
        final_pivot=pivot,
        det=det,
        closed_form=closed_form_det(ws.coeffs),
        pivot_equals_det=trace.parity * pivot == det,
        hart_diagonal=diag.rows[0][0],
    )
    return Solution.from_diagonal(diag), diagnostics
