"""Seeded random test corpora.

Draw ``r`` of a run with seed ``s`` always comes from
``numpy.random.Generator(PCG64(SeedSequence([s, r])))``, so any draw can be
reproduced on its own, in any order, on any machine.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def rng_for(seed: int, index: int = 0) -> np.random.Generator:
    if seed < 0 or index < 0:
        raise ValueError("seed and index must be nonnegative")
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


def random_row(rng: np.random.Generator, m: int, entry_range: int) -> list[int]:
    while True:
        row = [int(x) for x in rng.integers(-entry_range, entry_range, size=m, endpoint=True)]
        if any(row):
            return row


def random_matrix(rng: np.random.Generator, n: int, m: int | None = None,
                  entry_range: int = 9) -> list[list[int]]:
    """n x m integer matrix, entries uniform in [-range, range], no all-zero row."""
    return [random_row(rng, n if m is None else m, entry_range) for _ in range(n)]


def _pivots(a) -> list[Fraction]:
    """Pivots of plain rational elimination without row exchanges (0 once one vanishes)."""
    a = [[Fraction(x) for x in r] for r in a]
    n = len(a)
    out = []
    for k in range(n):
        p = a[k][k]
        out.append(p)
        if p == 0:
            return out + [Fraction(0)] * (n - k - 1)
        for i in range(k + 1, n):
            f = a[i][k] / p
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return out


def leading_minors_nonzero(a) -> bool:
    return all(p != 0 for p in _pivots(a))


def is_nonsingular(a) -> bool:
    a = [[Fraction(x) for x in r] for r in a]
    n = len(a)
    for k in range(n):
        r = next((r for r in range(k, n) if a[r][k] != 0), None)
        if r is None:
            return False
        a[k], a[r] = a[r], a[k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return True


def random_square(rng: np.random.Generator, n: int, entry_range: int = 9,
                  leading_minors: bool = False) -> tuple[list[list[int]], int]:
    """Nonsingular n x n matrix, resampled as needed.  Returns (matrix, resamples)."""
    accept = leading_minors_nonzero if leading_minors else is_nonsingular
    resamples = 0
    while True:
        a = random_matrix(rng, n, n, entry_range)
        if accept(a):
            return a, resamples
        resamples += 1


def random_system(rng: np.random.Generator, n: int, entry_range: int = 9,
                  leading_minors: bool = True) -> tuple[list[list[int]], list[int], int]:
    """Coefficients, right-hand side and resample count of a nonsingular system."""
    a, resamples = random_square(rng, n, entry_range, leading_minors)
    b = [int(x) for x in rng.integers(-entry_range, entry_range, size=n, endpoint=True)]
    return a, b, resamples
