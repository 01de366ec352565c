"""Forward reduction to row echelon form.

Every variant uses one update rule for the changed entries,

    a'[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / divisor(k)

for rows i below the pivot row k and columns j >= k.  The divisor is what
tells the variants apart:

* ``NINE_CHAPTERS``: always 1, the plain cross-multiplication of the
  counting board.  Entries roughly double in length each step.
* ``CHIO``: the pivot of the previous step (1 for the first step).  The
  division is always exact over an integral domain, and the pivot at step k
  is the k-th leading principal minor.
* ``FIELD_GAUSS``: the current pivot, i.e. ordinary Gaussian elimination.
  Needs a field.

Entries not covered by the rule are copied forward unchanged.
"""

from __future__ import annotations

from enum import Enum

from .errors import InexactDivision, RankDeficient, RingMismatch, ZeroPivot
from .ring import OpTally
from .tableau import Tableau
from .trace import BoardSnapshot, Trace


class PivotStrategy(Enum):
    NINE_CHAPTERS = "nine"
    CHIO = "chio"
    FIELD_GAUSS = "field"


class PivotPolicy(Enum):
    STRICT = "strict"
    SWAP = "swap"


def pivot_select(t: Tableau, k: int, policy: PivotPolicy = PivotPolicy.STRICT) -> tuple[int, bool]:
    """Row (1-based) to use as pivot row at step ``k`` and whether it needs a swap."""
    z = t.ring.is_zero
    c = k - 1
    if not z(t.rows[c][c]):
        return k, False
    below = next((r for r in range(c + 1, t.n) if not z(t.rows[r][c])), None)
    if below is None:
        raise RankDeficient(k)
    if policy is PivotPolicy.STRICT:
        raise ZeroPivot(k, below + 1)
    return below + 1, True


def divisor_for(t: Tableau, k: int, strategy: PivotStrategy):
    """The divisor for step ``k`` read off tableau ``t``, or None when it is 1."""
    if strategy is PivotStrategy.NINE_CHAPTERS:
        return None
    if strategy is PivotStrategy.CHIO:
        # the previous pivot row is frozen once its step is done
        return None if k == 1 else t.rows[k - 2][k - 2]
    return t.rows[k - 1][k - 1]


def check_strategy(t: Tableau, strategy: PivotStrategy):
    if strategy is PivotStrategy.FIELD_GAUSS and not t.ring.is_field:
        raise RingMismatch(f"field Gaussian elimination needs a field, not {t.ring.name}; "
                           "convert the tableau with .over(QQ) first")


def apply_step(t: Tableau, k: int, strategy: PivotStrategy, policy: PivotPolicy,
               tally: OpTally | None, jordan: bool = False):
    """One elimination step.  Returns ``(tableau, swap, divisor)``.

    With ``jordan`` the rows above the pivot are cleared too.  Those rows
    only hold their own diagonal entry left of column k, and that entry is
    rescaled with the rest of the row so the row stays a consistent equation.
    """
    check_strategy(t, strategy)
    ring = t.ring
    rows = [list(r) for r in t.rows]
    pr, swapped = pivot_select(t, k, policy)
    c = k - 1
    swap = None
    if swapped:
        rows[c], rows[pr - 1] = rows[pr - 1], rows[c]
        swap = (k, pr)
    # the Chio divisor sits above the pivot row and is untouched by the swap
    delta = divisor_for(Tableau(rows, ring, t.step, t.rhs_cols), k, strategy)
    piv = rows[c]
    akk = piv[c]
    targets = range(t.n) if jordan else range(k, t.n)
    for i in targets:
        if i == c:
            continue
        row = rows[i]
        aik = row[c]
        cols = list(range(k, t.m))
        if jordan and i < c and strategy is not PivotStrategy.FIELD_GAUSS:
            cols.insert(0, i)
        new = list(row)
        new[c] = ring.zero
        for j in cols:
            val = ring.sub(ring.mul(akk, row[j], tally), ring.mul(aik, piv[j], tally), tally)
            if delta is not None:
                try:
                    val = ring.exact_div(val, delta, tally)
                except InexactDivision as err:
                    err.row, err.col = i + 1, j + 1
                    raise
            new[j] = val
        rows[i] = new
    return t.next(rows), swap, delta


def snapshot(t: Tableau, phase: str, pivot=None, divisor=None, swap=None,
             ops: OpTally | None = None) -> BoardSnapshot:
    return BoardSnapshot(
        step=t.step,
        phase=phase,
        pivot=pivot,
        divisor=divisor,
        swap=swap,
        entries=t.strings(),
        max_bits=t.entry_bits(),
        ops=ops if ops is not None else OpTally(),
    )


def forward_step(t: Tableau, k: int, strategy: PivotStrategy,
                 policy: PivotPolicy = PivotPolicy.STRICT,
                 tally: OpTally | None = None) -> Tableau:
    if not 1 <= k <= t.n - 1:
        raise ValueError(f"step index {k} outside 1..{t.n - 1}")
    return apply_step(t, k, strategy, policy, tally)[0]


def run_steps(t: Tableau, ks, strategy: PivotStrategy, policy: PivotPolicy,
              tally: OpTally | None, phase: str, jordan: bool = False,
              trace: Trace | None = None) -> tuple[Tableau, Trace]:
    tally = tally if tally is not None else OpTally()
    trace = trace if trace is not None else Trace()
    for k in ks:
        before = tally.copy()
        t, swap, delta = apply_step(t, k, strategy, policy, tally, jordan=jordan)
        divisor = "1" if delta is None else t.ring.to_str(delta)
        trace.events.append(snapshot(t, phase, (k, k), divisor, swap, tally - before))
    return t, trace


def forward_eliminate(t: Tableau, strategy: PivotStrategy,
                      policy: PivotPolicy = PivotPolicy.STRICT,
                      tally: OpTally | None = None) -> tuple[Tableau, Trace]:
    """Reduce ``t`` to row echelon form in n - 1 steps.

    The trace holds the initial board plus one snapshot per step.  Under the
    swap policy the determinant sign is ``trace.parity``.
    """
    if t.step != 1:
        raise ValueError("forward elimination starts from an initial tableau (step 1)")
    check_strategy(t, strategy)
    trace = Trace([snapshot(t, "forward")])
    return run_steps(t, range(1, t.n), strategy, policy, tally, "forward", trace=trace)
