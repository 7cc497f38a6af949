"""Matrix products, rank, determinant, and kernel over finite fields."""

import random

import pytest

from tgrs.field import make_field
from tgrs.matrix import Matrix

F13 = make_field(13)


def M13(rows):
    return Matrix(F13, [[F13.element(e) for e in r] for r in rows])


def test_shapes_and_product():
    a = M13([[1, 2], [3, 4], [5, 6]])
    b = M13([[1, 0, 2], [0, 1, 3]])
    prod = a * b
    assert (prod.nrows, prod.ncols) == (3, 3)
    assert prod == M13([[1, 2, 8], [3, 4, 5], [5, 6, 2]])
    with pytest.raises(ValueError):
        b * b


def test_transpose_round_trip():
    a = M13([[1, 2, 3], [4, 5, 6]])
    assert a.transpose().transpose() == a


def test_rank_vandermonde():
    pts = [1, 2, 3, 4, 5]
    rows = [[pow(x, i, 13) for x in pts] for i in range(3)]
    assert M13(rows).rank() == 3
    # duplicate a row: rank unchanged
    assert M13(rows + [rows[0]]).rank() == 3


def test_det_small_cases():
    assert M13([[2]]).det() == F13.element(2)
    assert M13([[1, 2], [3, 4]]).det() == F13.element(1 * 4 - 2 * 3)
    a, b, c, d, e, f, g, h, i = 2, 7, 1, 0, 3, 5, 4, 4, 6
    expect = (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % 13
    assert M13([[a, b, c], [d, e, f], [g, h, i]]).det() == F13.element(expect)


def test_det_singular():
    assert M13([[1, 2], [2, 4]]).det() == F13.zero()


def test_det_permutation_sign():
    assert M13([[0, 1], [1, 0]]).det() == F13.element(-1)


def test_right_kernel():
    rng = random.Random(12)
    for _ in range(15):
        nrows = rng.randrange(1, 5)
        ncols = rng.randrange(nrows, nrows + 4)
        mat = Matrix(F13, [[F13.random_element(rng) for _ in range(ncols)]
                           for _ in range(nrows)])
        kernel = mat.right_kernel()
        assert len(kernel) == ncols - mat.rank()
        for vec in kernel:
            out = mat * Matrix(F13, [[e] for e in vec])
            assert out.is_zero()
        if kernel:
            assert Matrix(F13, kernel).rank() == len(kernel)
