"""Exterior powers of integer matrices in the lexicographic subset basis.

Subsets are reported 1-based, matching the basis ``e_{i1} ^ ... ^ e_{ir}``
with ``1 <= i1 < ... < ir <= n``.  Internally everything is 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .linalg import IntMatrix, SparseRows, as_matrix, determinant


@dataclass(frozen=True)
class SubsetBasis:
    n: int
    r: int
    subsets: tuple

    def __len__(self):
        return len(self.subsets)

    def index(self, subset) -> int:
        return self.subsets.index(tuple(subset))


def _check_degree(n: int, r: int):
    if r < 0 or r > n:
        raise ValueError(f"exterior degree r={r} out of range for n={n}")


def subsets_lex(n: int, r: int) -> SubsetBasis:
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_degree(n, r)
    return SubsetBasis(n, r, tuple(combinations(range(1, n + 1), r)))


def minor(a, row_set, col_set) -> int:
    """Determinant of the submatrix on the given 1-based rows and columns."""
    a = as_matrix(a)
    row_set, col_set = tuple(row_set), tuple(col_set)
    if len(row_set) != len(col_set):
        raise ValueError("row and column sets differ in size")
    for idx, bound in ((row_set, a.nrows), (col_set, a.ncols)):
        if any(not 1 <= i <= bound for i in idx):
            raise ValueError(f"index out of range in {idx}")
        if any(x >= y for x, y in zip(idx, idx[1:])):
            raise ValueError(f"indices must be strictly increasing: {idx}")
    sub = IntMatrix.from_rows([[a[i - 1, j - 1] for j in col_set] for i in row_set])
    return determinant(sub)


def exterior_rows(a, r: int) -> SparseRows:
    """Sparse rows of the r-th exterior power (internal fast path).

    Row-sets are grown from the bottom up, one matrix row at a time, and the
    dict of all minors on the current row-set is expanded along the new top
    row.  Row-sets sharing a suffix therefore share work, and zero entries of
    ``a`` cost nothing, which matters for the nearly bidiagonal unipotent
    matrices.
    """
    a = as_matrix(a)
    if not a.is_square:
        raise ValueError("exterior power of a non-square matrix")
    n = a.nrows
    _check_degree(n, r)
    subsets = list(combinations(range(n), r))
    position = {s: k for k, s in enumerate(subsets)}
    out: SparseRows = [None] * len(subsets)
    nonzero = [[(j, v) for j, v in enumerate(a.row(i)) if v] for i in range(n)]

    def grow(rowset: tuple, minors: dict):
        if len(rowset) == r:
            out[position[rowset]] = {position[c]: v for c, v in minors.items()}
            return
        need_below = r - len(rowset) - 1
        top = rowset[0] if rowset else n
        for i in range(need_below, top):
            expanded: dict = {}
            for cols, val in minors.items():
                for j, aij in nonzero[i]:
                    if j in cols:
                        continue
                    below = 0
                    for c in cols:
                        if c < j:
                            below += 1
                        else:
                            break
                    key = cols[:below] + (j,) + cols[below:]
                    term = aij * val
                    expanded[key] = expanded.get(key, 0) + (-term if below & 1 else term)
            grow((i,) + rowset, {c: v for c, v in expanded.items() if v})

    grow((), {(): 1})
    return out


def exterior_power(a, r: int) -> IntMatrix:
    """The C(n,r) x C(n,r) matrix of r x r minors of ``a``."""
    a = as_matrix(a)
    rows = exterior_rows(a, r)
    return IntMatrix.from_sparse(rows, comb(a.nrows, r))


def exterior_minus_identity(a, r: int) -> SparseRows:
    """Sparse rows of ``Lambda^r a - I``."""
    rows = exterior_rows(a, r)
    for i, row in enumerate(rows):
        v = row.get(i, 0) - 1
        if v:
            row[i] = v
        else:
            row.pop(i, None)
    return rows
