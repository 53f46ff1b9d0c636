import random
from fractions import Fraction

import pytest

from hodgeloci.errors import AmbientMismatch, SizeMismatch
from hodgeloci.linalg import (
    Mat,
    Subspace,
    echelon,
    kernel_basis,
    rank,
    rank_fraction_free,
    rank_hint_modular,
)
from hodgeloci.numberfield import QQ, cyclotomic_field
from oracles import fraction_rank


def _random_rows(rng, nrows, ncols, true_rank):
    """Integer matrix of rank <= true_rank built as a product."""
    left = [[rng.randint(-3, 3) for _ in range(true_rank)] for _ in range(nrows)]
    right = [[rng.randint(-3, 3) for _ in range(ncols)] for _ in range(true_rank)]
    return [[sum(left[i][k] * right[k][j] for k in range(true_rank)) for j in range(ncols)]
            for i in range(nrows)]


@pytest.mark.parametrize("seed", range(12))
def test_rank_matches_fraction_oracle_and_bareiss(seed):
    rng = random.Random(seed)
    rows = _random_rows(rng, rng.randint(1, 8), rng.randint(1, 8), rng.randint(1, 6))
    m = Mat.from_rows(QQ, rows)
    expected = fraction_rank(rows)
    assert rank(m) == expected
    assert rank_fraction_free(m) == expected
    assert rank_hint_modular(m) <= expected


def test_rank_over_cyclotomic_field():
    F = cyclotomic_field(6)
    z = F.gen()
    # rows 1, z, z^2 and z * row: rank 1; the Vandermonde in 1, z, z^2 has rank 3
    m = Mat.from_rows(F, [[1, z, z * z], [z, z * z, z ** 3]])
    assert rank(m) == rank_fraction_free(m) == 1
    v = Mat.from_rows(F, [[1, 1, 1], [1, z, z * z], [1, z * z, z ** 4]])
    assert rank(v) == rank_fraction_free(v) == rank_hint_modular(v) == 3


def test_echelon_is_reduced():
    m = Mat.from_rows(QQ, [[2, 4, 6], [1, 2, 4], [0, 0, 0]])
    ech, r = echelon(m)
    assert r == 2
    assert ech.to_lists() == [[QQ(1), QQ(2), QQ(0)], [QQ(0), QQ(0), QQ(1)], [QQ(0)] * 3]


@pytest.mark.parametrize("seed", range(8))
def test_rank_nullity(seed):
    rng = random.Random(100 + seed)
    nrows, ncols = rng.randint(1, 7), rng.randint(1, 7)
    m = Mat.from_rows(QQ, _random_rows(rng, nrows, ncols, rng.randint(1, 5)))
    ker = kernel_basis(m)
    assert rank(m) + ker.dim == ncols
    for v in ker.basis():
        assert not m.apply(v)


def test_transpose_preserves_rank():
    rng = random.Random(3)
    m = Mat.from_rows(QQ, _random_rows(rng, 5, 9, 3))
    assert rank(m.transpose()) == rank(m)


def test_stacking():
    a = Mat.from_rows(QQ, [[1, 0], [0, 0]])
    b = Mat.from_rows(QQ, [[0, 1], [1, 1]])
    assert rank(a.vstack(b)) == 2
    assert a.hstack(b).ncols == 4
    assert a.hstack(b).rows[1] == {2: QQ.one, 3: QQ.one}
    with pytest.raises(SizeMismatch):
        a.vstack(Mat.from_rows(QQ, [[1, 2, 3]]))
    with pytest.raises(SizeMismatch):
        a.hstack(Mat.from_rows(QQ, [[1]]))
    with pytest.raises(SizeMismatch):
        Mat.from_rows(QQ, [[1, 2], [1]])


def test_subspace_operations():
    F = QQ
    U = Subspace.from_basis(F, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    W = Subspace.from_basis(F, 4, [[0, 1, 0, 0], [0, 0, 1, 0]])
    assert U.intersect(W) == Subspace.from_basis(F, 4, [[0, 1, 0, 0]])
    assert U.sum(W).dim == 3
    assert U.intersect(W).dim + U.sum(W).dim == U.dim + W.dim
    assert U.intersect(W) <= U
    assert not (U <= W)
    assert [0, 5, 0, 0] in U and [0, 0, 1, 0] not in U
    assert Subspace.from_equations(F, 4, [[0, 0, 1, 0], [0, 0, 0, 1]]) == U
    assert Subspace.full(F, 4).dim == 4 and Subspace.zero(F, 4).codim == 4
    with pytest.raises(AmbientMismatch):
        U.intersect(Subspace.full(F, 3))


def test_subspace_equality_is_basis_independent():
    F = cyclotomic_field(6)
    z = F.gen()
    a = Subspace.from_basis(F, 3, [[1, z, 0], [0, 1, 1]])
    b = Subspace.from_basis(F, 3, [[1, z + 1, 1], [2, 2 * z - 1, -1]])
    assert a == b


def test_fraction_entries():
    m = Mat.from_rows(QQ, [[Fraction(1, 2), Fraction(1, 3)], [3, 2]])
    assert rank(m) == rank_fraction_free(m) == 1
