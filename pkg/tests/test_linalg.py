import random
from collections import Counter
from itertools import product

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import int_matrices, unimodular
from torus_ktheory.exterior import exterior_power
from torus_ktheory.ktheory import anzai_matrix
from torus_ktheory.linalg import (
    AbelianGroup,
    IntMatrix,
    chain_from_diagonal,
    cokernel,
    determinant,
    kernel_rank,
    normalize_direct_sum,
    rank,
    smith_normal_form,
)

S3 = anzai_matrix(3).matrix
S6 = anzai_matrix(6).matrix


def lambda_minus_one(a, r):
    ext = exterior_power(a, r)
    return ext - IntMatrix.identity(ext.nrows)


def test_snf_examples():
    assert smith_normal_form([[0, 1, 0], [0, 0, 1], [0, 0, 0]]).diag == (1, 1, 0)
    assert smith_normal_form(IntMatrix.zeros(2)).diag == (0, 0)
    assert smith_normal_form([[2, 0], [0, 3]]).diag == (1, 6)


def test_snf_2x2_matches_gcd_and_determinant():
    # d1 = gcd of entries, d2 = |det| / d1 for nonsingular 2x2
    rng = random.Random(5)
    for _ in range(200):
        m = [[rng.randint(-30, 30) for _ in range(2)] for _ in range(2)]
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if det == 0:
            continue
        g = sympy.gcd_list([x for row in m for x in row])
        assert smith_normal_form(m).diag == (g, abs(det) // g)


def test_snf_of_empty_and_rectangular():
    assert smith_normal_form(IntMatrix(0, 3, ())).diag == ()
    assert smith_normal_form([[2, 4, 6]]).diag == (2,)
    s = smith_normal_form([[2], [4], [7]], want_transforms=True)
    assert s.diag == (1,)


def check_transforms(m, s):
    d = s.diagonal_matrix(m.nrows, m.ncols)
    assert s.left_transform @ m @ s.right_transform == d
    assert abs(determinant(s.left_transform)) == 1
    assert abs(determinant(s.right_transform)) == 1


def check_chain(diag, rank_):
    nz = diag[:rank_]
    assert all(d >= 1 for d in nz)
    assert all(d == 0 for d in diag[rank_:])
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@given(int_matrices())
def test_snf_transform_identity(m):
    s = smith_normal_form(m, want_transforms=True)
    check_chain(s.diag, s.rank)
    check_transforms(m, s)


@given(int_matrices())
def test_sparse_and_dense_engines_agree(m):
    assert smith_normal_form(m).diag == smith_normal_form(m, want_transforms=True).diag


@given(st.data())
def test_snf_invariant_under_unimodular_change(data):
    m = data.draw(int_matrices(max_rows=5, max_cols=5, bound=9))
    u = data.draw(unimodular(m.nrows))
    v = data.draw(unimodular(m.ncols))
    assert smith_normal_form(u @ m @ v).diag == smith_normal_form(m).diag


@given(int_matrices(bound=9))
def test_snf_matches_sympy(m):
    if m.nrows == 0 or m.ncols == 0:
        return
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf
    ref = sympy_snf(sympy.Matrix(m.to_rows()), domain=sympy.ZZ)
    ref_diag = sorted(abs(int(ref[i, i])) for i in range(min(m.shape)))
    ours = smith_normal_form(m).diag
    assert sorted(ours) == ref_diag


@given(int_matrices(bound=9))
def test_rank_matches_sympy(m):
    expected = sympy.Matrix(m.to_rows()).rank() if m.nrows and m.ncols else 0
    assert rank(m) == expected


@given(int_matrices(square=True, bound=9))
def test_determinant_matches_sympy(m):
    assert determinant(m) == sympy.Matrix(m.to_rows()).det()


def test_rank_examples():
    assert rank(IntMatrix.identity(4)) == 4
    assert rank([[0, 1, 0], [0, 0, 1], [0, 0, 0]]) == 2
    assert rank(IntMatrix.zeros(3)) == 0


def test_cokernel_examples():
    assert cokernel(lambda_minus_one(S6, 3)) == AbelianGroup(3, (2,))
    assert cokernel(lambda_minus_one(S3, 2)) == AbelianGroup(1, ())
    assert cokernel(IntMatrix.identity(5)) == AbelianGroup(0, ())


def test_cokernel_rejects_rectangular():
    with pytest.raises(ValueError):
        cokernel([[1, 2]])


def test_kernel_rank_examples():
    assert kernel_rank(lambda_minus_one(S3, 1)) == 1
    assert kernel_rank(lambda_minus_one(S6, 3)) == 3
    assert kernel_rank(IntMatrix.identity(3)) == 0


@given(int_matrices(square=True, bound=9))
def test_kernel_rank_equals_free_rank_of_cokernel(m):
    assert kernel_rank(m) == cokernel(m).free_rank


# direct sums ---------------------------------------------------------------


def order_profile(cyclic_orders):
    """Multiset of element orders of a finite product of cyclic groups.

    Two finite abelian groups are isomorphic iff these agree.
    """
    from math import gcd, lcm
    profile = Counter()
    for elem in product(*(range(k) for k in cyclic_orders)):
        o = 1
        for x, k in zip(elem, cyclic_orders):
            o = lcm(o, k // gcd(x, k))
        profile[o] += 1
    return profile


def test_direct_sum_examples():
    assert normalize_direct_sum([AbelianGroup(0, (2,)), AbelianGroup(0, (3,))]).torsion == (6,)
    z4_z6 = normalize_direct_sum([AbelianGroup(0, (4,)), AbelianGroup(0, (6,))])
    assert z4_z6.torsion == (2, 12)
    assert order_profile((4, 6)) == order_profile((2, 12))
    assert order_profile((4, 6)) != order_profile((24,))
    s = normalize_direct_sum([AbelianGroup(4), AbelianGroup(9, (2,))])
    assert s == AbelianGroup(13, (2,))


def p_primary(torsion):
    parts = Counter()
    for t in torsion:
        for p, e in sympy.factorint(t).items():
            parts[(p, e)] += 1
    return parts


@given(st.lists(st.tuples(st.integers(0, 3),
                          st.lists(st.integers(2, 60), max_size=4)), max_size=5))
def test_direct_sum_preserves_primary_parts(raw):
    parts = [AbelianGroup(f, tuple(d for d in chain_from_diagonal(t) if d > 1))
             for f, t in raw]
    total = normalize_direct_sum(parts)
    assert total.free_rank == sum(f for f, _ in raw)
    flat = [x for _, t in raw for x in t]
    assert p_primary(total.torsion) == p_primary(flat)
    prod_ = 1
    for x in flat:
        prod_ *= x
    assert total.torsion_order == prod_


def test_direct_sum_isomorphism_small_groups():
    # brute-force: normalized chain has the same element-order profile
    for orders in [(2, 2, 4), (6, 10), (4, 4, 6), (3, 9, 6)]:
        chain = normalize_direct_sum([AbelianGroup(0, (k,)) for k in orders]).torsion
        assert order_profile(orders) == order_profile(chain)


def test_abelian_group_validation_and_text():
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 6))
    assert str(AbelianGroup(32, (8, 8))) == "Z^32 + Z_8^(2)"
    assert str(AbelianGroup()) == "0"
    g = AbelianGroup(3, (2, 4))
    assert AbelianGroup.from_json(g.to_json()) == g


def test_big_entries_are_exact():
    big = 2 ** 200 + 1
    m = IntMatrix.from_rows([[big, 0], [0, big * 3]])
    assert smith_normal_form(m).diag == (big, 3 * big)
    assert determinant(m) == 3 * big * big
