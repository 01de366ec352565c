"""Finishing an echelon tableau: back substitution, Hart's backward phase, Gauss-Jordan."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .corpus import rng_for, random_system
from .eliminate import (PivotPolicy, PivotStrategy, check_strategy, forward_eliminate,
                        run_steps, snapshot)
from .errors import (DimensionMismatch, InexactDivision, OverDetermined, RingMismatch,
                     SingularDiagonal, UnderDetermined)
from .ring import QQ, ZZ, OpTally, gcd
from .tableau import Tableau, from_system
from .trace import Trace


@dataclass(frozen=True)
class Solution:
    """Exact unknowns, optionally as numerators over one shared denominator."""

    values: tuple[Fraction, ...]
    numerators: tuple[int, ...] | None = None
    denominator: int | None = None

    @classmethod
    def from_diagonal(cls, t: Tableau, tally: OpTally | None = None) -> Solution:
        """Read x_i = rhs_i / diag_i off a diagonal tableau (counts n divisions)."""
        _require_square_system(t)
        values = []
        for i, row in enumerate(t.rows):
            if t.ring.is_zero(row[i]):
                raise SingularDiagonal(i + 1)
            values.append(QQ.exact_div(Fraction(row[-1]), Fraction(row[i]), tally))
        diag = t.diagonal()
        if t.ring is ZZ and len(set(diag)) == 1:
            return cls(tuple(values), tuple(r[-1] for r in t.rows), diag[0])
        return cls(tuple(values))


def _require_square_system(t: Tableau):
    if t.m > t.n + 1:
        raise UnderDetermined(f"{t.n} equations in {t.m - 1} unknowns")
    if t.m < t.n + 1:
        raise OverDetermined(f"{t.n}x{t.m} tableau has no right-hand side column")


def back_substitute(t: Tableau, tally: OpTally | None = None) -> Solution:
    """Evaluate the unknowns of an echelon tableau from the last row upward."""
    _require_square_system(t)
    if not t.is_upper_triangular():
        raise ValueError("tableau is not in row echelon form")
    if t.ring not in (ZZ, QQ):
        raise RingMismatch(f"back substitution needs integer or rational entries, not {t.ring.name}")
    n = t.n
    a = [[Fraction(x) for x in r] for r in t.rows]
    for i in range(n):
        if a[i][i] == 0:
            raise SingularDiagonal(i + 1)
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        acc = a[i][n]
        for j in range(i + 1, n):
            acc = QQ.sub(acc, QQ.mul(a[i][j], x[j], tally), tally)
        x[i] = QQ.exact_div(acc, a[i][i], tally)
    return Solution(tuple(x))


def hart_backward(t: Tableau, moderate: bool = False,
                  tally: OpTally | None = None) -> tuple[Tableau, Trace]:
    """Clear the columns above the diagonal from right to left, keeping integers.

    Clearing column c replaces each row i above it by

        (d_c * row_i - a[i][c] * row_c) / delta_i

    where d_c is row c's diagonal entry and delta_i is row i's own.  After the
    first step every diagonal entry equals the last pivot, which the remaining
    steps keep.  A division that does not come out even raises
    ``InexactDivision``; nothing is ever rounded.

    With ``moderate`` each row is also divided by the gcd of its entries after
    every step.  Rows then stay proportional to the unmoderated result but the
    diagonal is no longer one repeated value.
    """
    if t.ring is not ZZ:
        raise RingMismatch("the backward phase runs on integer tableaux")
    _require_square_system(t)
    if not t.is_upper_triangular():
        raise ValueError("tableau is not in row echelon form")
    n, m = t.n, t.m
    for i in range(n):
        if t.rows[i][i] == 0:
            raise SingularDiagonal(i + 1)
    tally = tally if tally is not None else OpTally()
    trace = Trace()
    rows = [list(r) for r in t.rows]
    for c in reversed(range(1, n)):
        before = tally.copy()
        d = rows[c][c]
        divisors = []
        for i in range(c):
            delta = rows[i][i]
            divisors.append(delta)
            aic = rows[i][c]
            new = list(rows[i])
            new[c] = 0
            for j in range(i, m):
                if j == c:
                    continue
                val = ZZ.sub(ZZ.mul(d, rows[i][j], tally), ZZ.mul(aic, rows[c][j], tally), tally)
                try:
                    new[j] = ZZ.exact_div(val, delta, tally)
                except InexactDivision as err:
                    err.row, err.col = i + 1, c + 1
                    raise
            rows[i] = new
        if moderate:
            rows = [_moderate(r) for r in rows]
        t = t.next(rows)
        trace.events.append(snapshot(t, "hart", (c + 1, c + 1), ",".join(map(str, divisors)),
                                     None, tally - before))
    return t, trace


def _moderate(row):
    g = 0
    for x in row:
        g = gcd(g, x)
    return row if g in (0, 1) else [x // g for x in row]


def gauss_jordan(t: Tableau, strategy: PivotStrategy,
                 policy: PivotPolicy = PivotPolicy.STRICT,
                 tally: OpTally | None = None) -> tuple[Tableau, Trace]:
    """Eliminate above and below each pivot so the leading block ends diagonal.

    Runs n steps: the last one clears column n above the diagonal.
    """
    if t.step != 1:
        raise ValueError("Gauss-Jordan starts from an initial tableau (step 1)")
    check_strategy(t, strategy)
    trace = Trace([snapshot(t, "jordan")])
    return run_steps(t, range(1, t.n + 1), strategy, policy, tally, "jordan",
                     jordan=True, trace=trace)


def solve(t: Tableau, strategy: PivotStrategy = PivotStrategy.CHIO,
          policy: PivotPolicy = PivotPolicy.STRICT, finish: str = "backsub",
          moderate: bool = False, tally: OpTally | None = None) -> tuple[Solution, Trace]:
    """Forward phase plus one of the three finishing phases."""
    _require_square_system(t)
    if strategy is PivotStrategy.FIELD_GAUSS and t.ring is ZZ:
        t = t.over(QQ)
    if finish == "jordan":
        diag, trace = gauss_jordan(t, strategy, policy, tally)
        return Solution.from_diagonal(diag, tally), trace
    echelon, trace = forward_eliminate(t, strategy, policy, tally)
    if finish == "backsub":
        return back_substitute(echelon, tally), trace
    if finish == "hart":
        if echelon.ring is not ZZ:
            raise RingMismatch("the backward phase needs an integer forward phase (nine or chio)")
        diag, back = hart_backward(echelon, moderate, tally)
        return Solution.from_diagonal(diag), trace.extend(back)
    raise ValueError(f"unknown finishing phase {finish!r}")


@dataclass(frozen=True)
class OpCountReport:
    n: int
    strategy: PivotStrategy
    seed: int
    ge: OpTally
    gj: OpTally
    resamples: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.gj.multiplicative, self.ge.multiplicative)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "strategy": self.strategy.value,
            "seed": self.seed,
            "ge": self.ge.as_dict(),
            "gj": self.gj.as_dict(),
            "ge_multiplicative": self.ge.multiplicative,
            "gj_multiplicative": self.gj.multiplicative,
            "ratio": float(self.ratio),
            "resamples": self.resamples,
        }


def pipeline_tallies(coeffs, rhs, strategy: PivotStrategy,
                     policy: PivotPolicy = PivotPolicy.STRICT):
    """Run elimination+back substitution and Gauss-Jordan on one system.

    Returns ``(ge_tally, gj_tally, ge_solution, gj_solution, echelon_trace)``.
    """
    t = from_system(coeffs, rhs)
    if strategy is PivotStrategy.FIELD_GAUSS:
        t = t.over(QQ)
    ge = OpTally()
    echelon, trace = forward_eliminate(t, strategy, policy, ge)
    ge_sol = back_substitute(echelon, ge)
    gj = OpTally()
    diag, _ = gauss_jordan(t, strategy, policy, gj)
    gj_sol = Solution.from_diagonal(diag, gj)
    return ge, gj, ge_sol, gj_sol, trace


def op_count_compare(n: int, strategy: PivotStrategy, seed: int,
                     entry_range: int = 9) -> OpCountReport:
    if n < 2:
        raise DimensionMismatch("operation counts need n >= 2")
    coeffs, rhs, resamples = random_system(rng_for(seed, n), n, entry_range)
    ge, gj, _, _, _ = pipeline_tallies(coeffs, rhs, strategy)
    return OpCountReport(n, strategy, seed, ge, gj, resamples)
