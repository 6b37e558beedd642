import random
from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import int_matrices
from torus_ktheory.exterior import exterior_power, minor, subsets_lex
from torus_ktheory.ktheory import anzai_matrix
from torus_ktheory.linalg import IntMatrix, determinant
from torus_ktheory.sampling import elementary_product, random_matrix

S3 = anzai_matrix(3).matrix


def test_subsets_lex_examples():
    assert subsets_lex(3, 2).subsets == ((1, 2), (1, 3), (2, 3))
    assert subsets_lex(5, 0).subsets == ((),)
    assert subsets_lex(4, 4).subsets == ((1, 2, 3, 4),)


@pytest.mark.parametrize("n,r", [(3, 4), (3, -1)])
def test_subsets_lex_rejects_bad_degree(n, r):
    with pytest.raises(ValueError):
        subsets_lex(n, r)


@given(st.integers(0, 9), st.data())
def test_subsets_lex_is_sorted_and_complete(n, data):
    r = data.draw(st.integers(0, n))
    basis = subsets_lex(n, r)
    assert len(basis) == comb(n, r)
    assert list(basis.subsets) == sorted(basis.subsets)
    assert all(all(x < y for x, y in zip(s, s[1:])) for s in basis.subsets)


def test_exterior_examples():
    assert exterior_power(S3, 2).to_rows() == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]
    a = IntMatrix.from_rows([[3, 1], [4, 1]])
    assert exterior_power(a, 0).to_rows() == [[1]]
    assert exterior_power(IntMatrix.identity(4), 4).to_rows() == [[1]]
    assert exterior_power(a, 2).to_rows() == [[-1]]


def test_exterior_rejects_bad_degree():
    with pytest.raises(ValueError):
        exterior_power(S3, 4)


def test_minor_examples():
    assert minor(S3, (1, 2), (2, 3)) == 1
    assert minor(S3, (), ()) == 1
    assert minor([[2, 0, 0], [0, 3, 0], [0, 0, 5]], (1, 3), (1, 3)) == 10


@pytest.mark.parametrize("rows,cols", [((0, 1), (1, 2)), ((1, 4), (1, 2)), ((2, 1), (1, 2))])
def test_minor_rejects_bad_indices(rows, cols):
    with pytest.raises(ValueError):
        minor(S3, rows, cols)


@given(int_matrices(max_rows=5, square=True, bound=6), st.data())
def test_entries_are_minors(a, data):
    # the Laplace-sharing fast path against per-entry Bareiss determinants
    r = data.draw(st.integers(0, a.nrows))
    ext = exterior_power(a, r)
    basis = subsets_lex(a.nrows, r).subsets
    for i, rows in enumerate(basis):
        for j, cols in enumerate(basis):
            assert ext[i, j] == minor(a, rows, cols)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    int_matrices(max_rows=n, square=True, bound=4).filter(lambda m: m.nrows == n),
    int_matrices(max_rows=n, square=True, bound=4).filter(lambda m: m.nrows == n))), st.data())
def test_functoriality(pair, data):
    a, b = pair
    r = data.draw(st.integers(0, a.nrows))
    assert exterior_power(a @ b, r) == exterior_power(a, r) @ exterior_power(b, r)


@pytest.mark.parametrize("n", range(0, 6))
def test_exterior_of_identity_is_identity(n):
    for r in range(n + 1):
        assert exterior_power(IntMatrix.identity(n), r) == IntMatrix.identity(comb(n, r))


@pytest.mark.parametrize("seed", range(10))
def test_exterior_of_sl_is_unimodular(seed):
    rng = random.Random(seed)
    a = elementary_product(4, rng)
    for r in range(5):
        assert abs(determinant(exterior_power(a, r))) == 1


@pytest.mark.parametrize("seed", range(15))
def test_traces_give_characteristic_polynomial(seed):
    rng = random.Random(seed)
    a = random_matrix(4, 4, rng, bound=5)
    t = sympy.Symbol("t")
    poly = sum((-1) ** r * sum(exterior_power(a, r)[i, i] for i in range(comb(4, r)))
               * t ** (4 - r) for r in range(5))
    assert sympy.expand(poly - sympy.Matrix(a.to_rows()).charpoly(t).as_expr()) == 0


def test_last_power_is_determinant():
    rng = random.Random(3)
    for _ in range(20):
        a = random_matrix(5, 5, rng, bound=7)
        assert exterior_power(a, 5).to_rows() == [[determinant(a)]]


def test_anzai_exterior_is_upper_unitriangular():
    a = anzai_matrix(7).matrix
    for r in range(8):
        ext = exterior_power(a, r)
        assert all(ext[i, i] == 1 for i in range(ext.nrows))
        assert all(ext[i, j] == 0 for i in range(ext.nrows) for j in range(i))
