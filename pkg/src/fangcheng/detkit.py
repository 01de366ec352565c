"""Determinants by condensation and by two brute-force oracles.

The oracles (cofactor expansion, permutation sum, Cramer's rule on top of
them) share no code with the elimination modules, so tests that compare the
two paths are genuinely two-sided.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .eliminate import PivotPolicy, PivotStrategy, forward_eliminate
from .errors import DimensionMismatch, RankDeficient, SingularLeadingMinor, SizeLimit, ZeroPivot
from .tableau import Tableau

COFACTOR_LIMIT = 8
PERMUTATION_LIMIT = 6

SquareMatrix = tuple  # tuple of equal-length int tuples


def as_square(a: Sequence[Sequence[int]]) -> SquareMatrix:
    rows = tuple(tuple(int(x) for x in r) for r in a)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DimensionMismatch("expected a nonempty square matrix")
    return rows


def _cofactor(a) -> int:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = 0
    for j, x in enumerate(a[0]):
        if x == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in a[1:]]
        term = x * _cofactor(minor)
        total += -term if j % 2 else term
    return total


def _parity(p) -> int:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def _permutation_sum(a) -> int:
    n = len(a)
    total = 0
    for p in permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= a[i][p[i]]
            if not prod:
                break
        if prod:
            total += _parity(p) * prod
    return total


def det_oracle(a, method: str = "cofactor") -> int:
    a = as_square(a)
    n = len(a)
    if method == "cofactor":
        if n > COFACTOR_LIMIT:
            raise SizeLimit(f"cofactor expansion is limited to n <= {COFACTOR_LIMIT}, got {n}")
        return _cofactor(a)
    if method in ("permutation", "perm"):
        if n > PERMUTATION_LIMIT:
            raise SizeLimit(f"permutation sum is limited to n <= {PERMUTATION_LIMIT}, got {n}")
        return _permutation_sum(a)
    raise ValueError(f"unknown oracle {method!r}")


def leading_principal_minor(a, k: int) -> int:
    a = as_square(a)
    if not 1 <= k <= len(a):
        raise ValueError(f"order {k} outside 1..{len(a)}")
    return det_oracle([r[:k] for r in a[:k]], "cofactor")


def cramer_solve(coeffs, rhs) -> tuple[Fraction, ...]:
    """Exact solution by Cramer's rule with cofactor determinants."""
    a = as_square(coeffs)
    if len(rhs) != len(a):
        raise DimensionMismatch("right-hand side length differs from matrix order")
    det = det_oracle(a)
    if det == 0:
        raise ZeroDivisionError("singular system")
    out = []
    for j in range(len(a)):
        aj = [r[:j] + (b,) + r[j + 1:] for r, b in zip(a, rhs)]
        out.append(Fraction(det_oracle(aj), det))
    return tuple(out)


def det_via_chio(a, policy: PivotPolicy | None = None) -> int:
    """Determinant as the last Chio pivot, sign-corrected for row exchanges."""
    policy = policy or PivotPolicy.STRICT
    a = as_square(a)
    try:
        echelon, trace = forward_eliminate(Tableau(a), PivotStrategy.CHIO, policy)
    except ZeroPivot as err:
        raise SingularLeadingMinor(err.k, err.candidate) from None
    except RankDeficient:
        return 0
    return trace.parity * echelon.rows[-1][-1]
