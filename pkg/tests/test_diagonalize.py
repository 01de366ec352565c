import itertools
from fractions import Fraction

import pytest

from fangcheng.corpus import random_system, rng_for
from fangcheng.detkit import cramer_solve
from fangcheng.diagonalize import (Solution, back_substitute, gauss_jordan, hart_backward,
                                   op_count_compare, pipeline_tallies, solve)
from fangcheng.eliminate import PivotStrategy, forward_eliminate
from fangcheng.errors import (InexactDivision, RingMismatch, SingularDiagonal, UnderDetermined,
                              OverDetermined)
from fangcheng.ring import QQ, OpTally
from fangcheng.tableau import Tableau, from_system
from oracles import rational_solve

NINE, CHIO, FIELD = PivotStrategy.NINE_CHAPTERS, PivotStrategy.CHIO, PivotStrategy.FIELD_GAUSS
CLASSIC = ([[3, 2, 1], [2, 3, 1], [1, 2, 3]], [39, 34, 26])
CLASSIC_ECHELON = Tableau([[3, 2, 1, 39], [0, 5, 1, 24], [0, 0, 36, 99]], step=3, rhs_cols=1)


def test_back_substitute_identity():
    t = Tableau([[1, 0, 0, 7], [0, 1, 0, 8], [0, 0, 1, 9]])
    assert back_substitute(t).values == (7, 8, 9)


def test_back_substitute_classic():
    x = back_substitute(CLASSIC_ECHELON).values
    assert x == (Fraction(37, 4), Fraction(17, 4), Fraction(11, 4))
    assert x == cramer_solve(*CLASSIC)


def test_back_substitute_singular():
    with pytest.raises(SingularDiagonal):
        back_substitute(Tableau([[0, 1, 5], [0, 2, 6]]))


def test_back_substitute_shape_errors():
    with pytest.raises(UnderDetermined):
        back_substitute(Tableau([[1, 2, 3, 4], [0, 1, 2, 3]]))
    with pytest.raises(OverDetermined):
        back_substitute(Tableau([[1, 2], [0, 1]]))
    with pytest.raises(ValueError):
        back_substitute(Tableau([[1, 2, 3], [1, 1, 2]]))


def test_hart_classic():
    diag, trace = hart_backward(CLASSIC_ECHELON)
    assert diag.rows == ((36, 0, 0, 333), (0, 36, 0, 153), (0, 0, 36, 99))
    assert [e.step for e in trace] == [4, 5]
    # first step divides rows 1 and 2 by their own pivots
    assert trace.events[0].divisor == "3,5"
    assert trace.events[0].entries[0] == ("36", "24", "0", "435")
    sol = Solution.from_diagonal(diag)
    assert sol.values == cramer_solve(*CLASSIC)
    assert (sol.numerators, sol.denominator) == ((333, 153, 99), 36)


def test_hart_nothing_to_clear():
    t = Tableau([[4, 12]])
    diag, trace = hart_backward(t)
    assert diag.rows == t.rows and len(trace) == 0


def _reference_hart_failure(rows):
    """First (row, column) whose division fails, by a direct re-implementation."""
    rows = [list(r) for r in rows]
    n = len(rows)
    for c in range(n - 1, 0, -1):
        d = rows[c][c]
        for i in range(c):
            di = rows[i][i]
            new = [d * rows[i][j] - rows[i][c] * rows[c][j] for j in range(n + 1)]
            if any(x % di for j, x in enumerate(new) if j != c):
                return i + 1, c + 1
            rows[i] = [x // di for x in new]
    return None


def test_hart_inexact_division_found_by_search():
    span = range(-5, 6)
    for a11, a12, a13, b1, a22, a23, b2, a33, b3 in itertools.product(span, repeat=9):
        if 0 in (a11, a22, a33):
            continue
        rows = [[a11, a12, a13, b1], [0, a22, a23, b2], [0, 0, a33, b3]]
        where = _reference_hart_failure(rows)
        if where:
            break
    assert rows == [[-5, -5, -5, -5], [0, -5, -5, -4], [0, 0, -4, -5]]
    assert where == (2, 3)
    with pytest.raises(InexactDivision) as info:
        hart_backward(Tableau(rows))
    assert (info.value.row, info.value.col) == where
    assert info.value.divisor == -5


def test_hart_preconditions():
    with pytest.raises(RingMismatch):
        hart_backward(CLASSIC_ECHELON.over(QQ))
    with pytest.raises(SingularDiagonal):
        hart_backward(Tableau([[1, 1, 1], [0, 0, 1]]))


def test_hart_moderation_keeps_rows_proportional():
    plain, _ = hart_backward(CLASSIC_ECHELON)
    moderated, _ = hart_backward(CLASSIC_ECHELON, moderate=True)
    for p, q in zip(plain.rows, moderated.rows):
        ratio = {Fraction(a, b) for a, b in zip(p, q) if b}
        assert len(ratio) == 1
    assert Solution.from_diagonal(moderated).values == cramer_solve(*CLASSIC)


def test_hart_agrees_with_back_substitution_on_random_systems():
    completed = 0
    for r in range(60):
        coeffs, rhs, _ = random_system(rng_for(99, r), 2 + r % 5)
        echelon, _ = forward_eliminate(from_system(coeffs, rhs), NINE)
        try:
            diag, _ = hart_backward(echelon)
        except InexactDivision:
            continue
        completed += 1
        last = echelon.rows[-1][-2]
        assert set(diag.diagonal()) == {last}
        assert all(diag.rows[i][j] == 0 for i in range(diag.n) for j in range(diag.n) if i != j)
        assert Solution.from_diagonal(diag).values == back_substitute(echelon).values
    assert completed > 0


def test_gauss_jordan_identity():
    t = Tableau([[1, 0, 0, 4], [0, 1, 0, 5], [0, 0, 1, 6]])
    for s in (NINE, CHIO):
        assert gauss_jordan(t, s)[0].rows == t.rows
    assert gauss_jordan(t.over(QQ), FIELD)[0].rows == t.over(QQ).rows


def test_gauss_jordan_field_example():
    t = Tableau([[2, 1, 5], [1, 3, 5]]).over(QQ)
    diag, trace = gauss_jordan(t, FIELD)
    assert Solution.from_diagonal(diag).values == (2, 1) == cramer_solve([[2, 1], [1, 3]], [5, 5])
    assert [e.phase for e in trace] == ["jordan"] * 3


def test_gauss_jordan_chio_keeps_one_diagonal_value():
    diag, _ = gauss_jordan(from_system(*CLASSIC), CHIO)
    assert diag.rows == ((12, 0, 0, 111), (0, 12, 0, 51), (0, 0, 12, 33))


def test_op_tallies_n3_field():
    ge, gj, ge_sol, gj_sol, _ = pipeline_tallies(*CLASSIC, FIELD)
    # counted by hand from the update rule: 2 products and 1 division per entry
    assert ge == OpTally(mul=19, div=11, addsub=11)
    assert gj == OpTally(mul=24, div=15, addsub=12)
    assert gj.multiplicative > ge.multiplicative
    assert ge_sol == gj_sol


def test_gauss_jordan_matches_elimination_on_random_systems():
    for r in range(40):
        coeffs, rhs, _ = random_system(rng_for(5, r), 2 + r % 5)
        for s in (NINE, CHIO, FIELD):
            _, _, ge_sol, gj_sol, _ = pipeline_tallies(coeffs, rhs, s)
            assert ge_sol.values == gj_sol.values == rational_solve(coeffs, rhs)


def test_op_count_compare():
    for n in (4, 10):
        for s in (NINE, CHIO, FIELD):
            report = op_count_compare(n, s, seed=0)
            assert report.gj.multiplicative > report.ge.multiplicative
            assert report.ratio > 1
    assert op_count_compare(6, CHIO, 17) == op_count_compare(6, CHIO, 17)


def test_solve_pipelines():
    t = from_system(*CLASSIC)
    expected = cramer_solve(*CLASSIC)
    for s in (NINE, CHIO, FIELD):
        for finish in ("backsub", "jordan"):
            assert solve(t, s, finish=finish)[0].values == expected
    sol, trace = solve(t, NINE, finish="hart")
    assert sol.values == expected and sol.denominator == 36
    assert len(trace) == 1 + 2 + 2
    with pytest.raises(RingMismatch):
        solve(t, FIELD, finish="hart")
