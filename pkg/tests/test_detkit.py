import pytest
from hypothesis import given, strategies as st

from fangcheng.corpus import random_matrix, rng_for
from fangcheng.detkit import (cramer_solve, det_oracle, det_via_chio, leading_principal_minor)
from fangcheng.eliminate import PivotPolicy
from fangcheng.errors import DimensionMismatch, SingularLeadingMinor, SizeLimit

A3 = [[2, 1, 1], [1, 3, 1], [1, 1, 4]]


def test_det_via_chio_examples():
    assert det_via_chio([[2, 1], [1, 3]]) == 5
    assert det_via_chio(A3) == 17 == det_oracle(A3, "cofactor")
    assert det_via_chio([[0, 1], [1, 0]], PivotPolicy.SWAP) == -1


def test_det_via_chio_singular_leading_minor():
    with pytest.raises(SingularLeadingMinor):
        det_via_chio([[0, 1], [1, 0]])
    with pytest.raises(SingularLeadingMinor):
        det_via_chio([[1, 2, 3], [2, 4, 1], [1, 1, 1]])


def test_det_via_chio_rank_deficient_is_zero():
    assert det_via_chio([[0, 1], [0, 2]], PivotPolicy.SWAP) == 0
    assert det_via_chio([[1, 2, 3], [2, 4, 6], [1, 1, 1]], PivotPolicy.SWAP) == 0


def test_oracles_small():
    assert det_oracle([[7]], "cofactor") == det_oracle([[7]], "permutation") == 7
    assert det_oracle([[2, 1], [1, 3]], "cofactor") == det_oracle([[2, 1], [1, 3]], "permutation") == 5


def test_three_way_random_4x4():
    for r in range(20):
        a = random_matrix(rng_for(4, r), 4)
        expected = det_oracle(a, "permutation")
        assert det_oracle(a, "cofactor") == expected
        assert det_via_chio(a, PivotPolicy.SWAP) == expected


def test_size_guards():
    big = [[int(i == j) for j in range(9)] for i in range(9)]
    with pytest.raises(SizeLimit):
        det_oracle(big, "cofactor")
    with pytest.raises(SizeLimit):
        det_oracle([r[:7] for r in big[:7]], "permutation")
    with pytest.raises(DimensionMismatch):
        det_oracle([[1, 2]])


def test_leading_principal_minor():
    a = random_matrix(rng_for(2), 5)
    assert leading_principal_minor(a, 1) == a[0][0]
    assert leading_principal_minor(A3, 2) == 5
    assert leading_principal_minor(a, 5) == det_oracle(a)


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def test_multiplicativity():
    for r in range(25):
        rng = rng_for(31, r)
        a, b = random_matrix(rng, 3), random_matrix(rng, 3)
        assert det_oracle(_matmul(a, b)) == det_oracle(a) * det_oracle(b)


matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


@given(matrices, st.randoms(use_true_random=False))
def test_swap_on_permuted_matrix(a, rnd):
    perm = list(range(len(a)))
    rnd.shuffle(perm)
    permuted = [a[p] for p in perm]
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    parity = -1 if inversions % 2 else 1
    assert det_via_chio(permuted, PivotPolicy.SWAP) == parity * det_oracle(a, "permutation")


def test_cramer_solve():
    assert cramer_solve([[2, 1], [1, 3]], [5, 5]) == (2, 1)
    with pytest.raises(ZeroDivisionError):
        cramer_solve([[1, 1], [1, 1]], [1, 2])
