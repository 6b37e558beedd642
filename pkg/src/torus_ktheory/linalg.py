"""Exact integer linear algebra: matrices, Smith normal form, cokernels.

Everything here works over Python's arbitrary-precision ``int``; nothing is
ever converted to floating point.  Two elimination engines live side by side:

* a dense one that tracks the unimodular transforms (used when a caller asks
  for them, and for small matrices in tests), and
* a sparse dict-of-rows one that only produces the diagonal.  This is the
  workhorse for the exterior powers of unipotent matrices, which are large
  (924 x 924 at n = 12) but have only a few percent nonzero entries.

Both engines first diagonalize without caring about divisibility and then run
the same gcd/lcm fix-up on the diagonal, so they must agree exactly.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

SparseRows = list  # list[dict[int, int]], one dict per row, column -> value


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    nrows: int
    ncols: int
    entries: tuple

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.nrows * self.ncols:
            raise ValueError(
                f"expected {self.nrows * self.ncols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> IntMatrix:
        ncols = nrows if ncols is None else ncols
        return cls(nrows, ncols, (0,) * (nrows * ncols))

    @classmethod
    def from_sparse(cls, rows: SparseRows, ncols: int) -> IntMatrix:
        dense = [[0] * ncols for _ in rows]
        for i, row in enumerate(rows):
            for j, v in row.items():
                dense[i][j] = v
        return cls.from_rows(dense) if rows else cls(0, ncols, ())

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.nrows)]

    def sparse_rows(self) -> SparseRows:
        return [{j: v for j, v in enumerate(self.row(i)) if v} for i in range(self.nrows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(
            [[self[i, j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.nrows, self.ncols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.nrows, self.ncols,
                         tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.nrows, self.ncols, tuple(-a for a in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.entries[j::other.ncols] for j in range(other.ncols)]
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(self.row(i), c)) for c in cols]
             for i in range(self.nrows)]
        ) if self.nrows else IntMatrix(0, other.ncols, ())

    def __pow__(self, k: int) -> IntMatrix:
        if not self.is_square or k < 0:
            raise ValueError("only nonnegative powers of square matrices")
        result, base = IntMatrix.identity(self.nrows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")


def as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix.from_rows(m)


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors ``d_1 | d_2 | ... | d_rank`` padded with zeros.

    When transforms were requested, ``left @ original @ right`` equals the
    diagonal matrix carrying ``diag``.
    """

    diag: tuple
    rank: int
    left_transform: IntMatrix | None = None
    right_transform: IntMatrix | None = None

    def diagonal_matrix(self, nrows: int, ncols: int) -> IntMatrix:
        rows = [[0] * ncols for _ in range(nrows)]
        for i, d in enumerate(self.diag):
            rows[i][i] = d
        return IntMatrix.from_rows(rows) if nrows else IntMatrix(0, ncols, ())


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """``Z^free_rank`` plus cyclic torsion in invariant-factor form."""

    free_rank: int = 0
    torsion: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion factors must be >= 2, got {t}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def free(cls, rank: int) -> AbelianGroup:
        return cls(rank, ())

    @property
    def torsion_order(self) -> int:
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        i = 0
        while i < len(self.torsion):
            t = self.torsion[i]
            j = i
            while j < len(self.torsion) and self.torsion[j] == t:
                j += 1
            parts.append(f"Z_{t}" if j - i == 1 else f"Z_{t}^({j - i})")
            i = j
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, obj: dict) -> AbelianGroup:
        return cls(int(obj["rank"]), tuple(obj["torsion"]))


# ---------------------------------------------------------------------------
# small helpers


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, nx, y, ny = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
    if a < 0:
        return -x, -y, -a
    return x, y, a


def _round_div(a: int, p: int) -> tuple[int, int]:
    # quotient/remainder with |rem| <= |p|/2
    q, rem = divmod(a, p)
    if 2 * abs(rem) > abs(p):
        q += 1
        rem -= p
    return q, rem


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    m = as_matrix(m)
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return 1
    a = m.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# divisibility fix-up shared by both SNF engines


def chain_from_diagonal(entries: Iterable[int]) -> list[int]:
    """Invariant factors of ``diag(entries)``, zeros moved to the end.

    Works by repeated ``(a, b) -> (gcd, lcm)`` on pairs, which preserves the
    equivalence class of a diagonal matrix and never needs factoring.
    """
    vals = [abs(x) for x in entries]
    zeros = sum(1 for v in vals if v == 0)
    units = sum(1 for v in vals if v == 1)
    rest = sorted(v for v in vals if v > 1)
    k = len(rest)
    for i in range(k):
        for j in range(i + 1, k):
            a, b = rest[i], rest[j]
            if b % a:
                g = gcd(a, b)
                rest[i], rest[j] = g, a // g * b
    rest = [v for v in rest if v != 1]
    units += k - len(rest)
    return [1] * units + rest + [0] * zeros


# ---------------------------------------------------------------------------
# sparse diagonalization (no transforms)


class _SparseEliminator:
    """Rows as dicts plus a column index and a lazy min-heap of column counts."""

    def __init__(self, rows: SparseRows):
        self.rows = {i: dict(r) for i, r in enumerate(rows) if r}
        self.cols: dict[int, set] = {}
        for i, r in self.rows.items():
            for j in r:
                self.cols.setdefault(j, set()).add(i)
        self.heap = [(len(c), j) for j, c in self.cols.items()]
        heapq.heapify(self.heap)

    def pick(self, tries: int = 64):
        """Pivot in one of the sparsest columns, preferring a unit entry."""
        rows, cols, heap = self.rows, self.cols, self.heap
        popped, fallback = [], None
        found = None
        while heap and len(popped) < tries:
            cnt, j = heapq.heappop(heap)
            c = cols.get(j)
            if not c:
                continue
            if len(c) != cnt:
                heapq.heappush(heap, (len(c), j))
                continue
            popped.append((cnt, j))
            i = min(c, key=lambda i: (abs(rows[i][j]), len(rows[i])))
            if fallback is None or abs(rows[i][j]) < abs(rows[fallback[0]][fallback[1]]):
                fallback = (i, j)
            if abs(rows[i][j]) == 1:
                found = (i, j)
                break
        for item in popped:
            heapq.heappush(heap, item)
        return found or fallback

    def axpy(self, k: int, q: int, prow: dict):
        """row_k -= q * prow"""
        rk, cols, heap = self.rows[k], self.cols, self.heap
        for j, v in prow.items():
            nv = rk.get(j, 0) - q * v
            if nv:
                if j not in rk:
                    cols.setdefault(j, set()).add(k)
                    heapq.heappush(heap, (len(cols[j]), j))
                rk[j] = nv
            elif j in rk:
                del rk[j]
                cols[j].discard(k)
        if not rk:
            del self.rows[k]

    def remove_row(self, i: int) -> dict:
        row = self.rows.pop(i)
        for j in row:
            self.cols[j].discard(i)
        return row


def _sparse_diagonal(rows: SparseRows) -> list[int]:
    """Nonzero diagonal entries of some diagonal matrix equivalent to ``rows``."""
    el = _SparseEliminator(rows)
    diag = []
    while True:
        piv = el.pick()
        if piv is None:
            return diag
        pi, pj = piv
        while True:
            prow = el.rows[pi]
            p = prow[pj]
            smaller = None
            for k in list(el.cols[pj]):
                if k == pi:
                    continue
                q, rem = _round_div(el.rows[k][pj], p)
                el.axpy(k, q, prow)
                if rem and (smaller is None or abs(rem) < abs(el.rows[smaller][pj])):
                    smaller = k
            if smaller is not None:
                pi = smaller
                continue
            # column pj is now clean, so column ops only touch row pi
            smaller_j = None
            for j in list(prow):
                if j == pj:
                    continue
                _, rem = _round_div(prow[j], p)
                if rem:
                    prow[j] = rem
                    if smaller_j is None or abs(rem) < abs(prow[smaller_j]):
                        smaller_j = j
                else:
                    del prow[j]
                    el.cols[j].discard(pi)
            if smaller_j is not None:
                pj = smaller_j
                continue
            break
        diag.append(abs(p))
        el.remove_row(pi)


def sparse_rank(rows: SparseRows) -> int:
    """Rank over Q of a sparse integer matrix.

    Fraction-free: a row is combined with the pivot row by cross-multiplying
    with the cofactors of the gcd, then divided by its content, so entries
    stay integral and small.
    """
    el = _SparseEliminator(rows)
    rank = 0
    while True:
        piv = el.pick()
        if piv is None:
            return rank
        pi, pj = piv
        prow = el.remove_row(pi)
        p = prow[pj]
        for k in list(el.cols[pj]):
            rk = el.rows[k]
            a = rk[pj]
            if a % p == 0:
                el.axpy(k, a // p, prow)
            else:
                g = gcd(a, p)
                s = p // g
                for j in rk:
                    rk[j] *= s
                el.axpy(k, a // g, prow)
            rk = el.rows.get(k)
            if rk:
                c = 0
                for v in rk.values():
                    c = gcd(c, v)
                    if c == 1:
                        break
                if c > 1:
                    for j in rk:
                        rk[j] //= c
        rank += 1


# ---------------------------------------------------------------------------
# dense diagonalization with transforms


def _dense_smith(m: IntMatrix) -> SmithForm:
    nr, nc = m.shape
    a = m.to_rows()
    u = IntMatrix.identity(nr).to_rows()
    v = IntMatrix.identity(nc).to_rows()

    def row_addmul(dst, src, q):  # row_dst -= q * row_src, mirrored on U
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def col_addmul(dst, src, q):  # col_dst -= q * col_src, mirrored on V
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    for t in range(min(nr, nc)):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = a[i][j]
                if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    q, _ = _round_div(a[i][t], p)
                    row_addmul(i, t, q)
            for j in range(t + 1, nc):
                if a[t][j]:
                    q, _ = _round_div(a[t][j], p)
                    col_addmul(j, t, q)
            # any leftover in row/column t is smaller than |p|: move it in
            best = None
            for i in range(t + 1, nr):
                if a[i][t] and (best is None or abs(a[i][t]) < abs(best[1])):
                    best = (("r", i), a[i][t])
            for j in range(t + 1, nc):
                if a[t][j] and (best is None or abs(a[t][j]) < abs(best[1])):
                    best = (("c", j), a[t][j])
            if best is None:
                break
            kind, idx = best[0]
            if kind == "r":
                swap_rows(t, idx)
            else:
                swap_cols(t, idx)

    # gcd/lcm fix-up on the diagonal with explicit 2x2 unimodular steps
    k = min(nr, nc)
    for i in range(k):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    nz = [i for i in range(k) if a[i][i]]
    zero = [i for i in range(k) if not a[i][i]]
    # nonzero diagonal entries to the front
    order = nz + zero
    perm_rows = order + list(range(k, nr))
    perm_cols = order + list(range(k, nc))
    a = [[a[i][j] for j in perm_cols] for i in perm_rows]
    u = [u[i] for i in perm_rows]
    v = [[row[j] for j in perm_cols] for row in v]

    r = len(nz)
    for i in range(r):
        for j in range(i + 1, r):
            x, y = a[i][i], a[j][j]
            if y % x == 0:
                continue
            s, w, g = xgcd(x, y)
            # [[s, w], [-y/g, x/g]] diag(x, y) [[1, -w*y/g], [1, s*x/g]] = diag(g, lcm)
            yg, xg = y // g, x // g
            ui, uj = u[i], u[j]
            u[i] = [s * p + w * q for p, q in zip(ui, uj)]
            u[j] = [-yg * p + xg * q for p, q in zip(ui, uj)]
            for row in v:
                ci, cj = row[i], row[j]
                row[i] = ci + cj
                row[j] = -w * yg * ci + s * xg * cj
            a[i][i], a[j][j] = g, x * yg
    diag = tuple(a[i][i] for i in range(k))
    return SmithForm(diag, r, IntMatrix.from_rows(u) if nr else IntMatrix(0, 0, ()),
                     IntMatrix.from_rows(v) if nc else IntMatrix(0, 0, ()))


# ---------------------------------------------------------------------------
# public operations


def smith_normal_form(m, want_transforms: bool = False) -> SmithForm:
    """Smith normal form of an integer matrix.

    Without transforms the sparse engine is used; it scales to the ~1000 x 1000
    exterior-power matrices.  With transforms, a dense engine records ``U`` and
    ``V`` such that ``U @ m @ V`` is diagonal with the returned ``diag``.
    """
    m = as_matrix(m)
    if want_transforms:
        return _dense_smith(m)
    return smith_from_sparse(m.sparse_rows(), min(m.nrows, m.ncols))


def smith_from_sparse(rows: SparseRows, size: int) -> SmithForm:
    """Diagonal-only SNF of a matrix given as sparse rows; ``size`` = min(shape)."""
    chain = chain_from_diagonal(_sparse_diagonal(rows))
    rank = sum(1 for d in chain if d)
    chain = [d for d in chain if d] + [0] * (size - rank)
    return SmithForm(tuple(chain), rank)


def rank(m) -> int:
    """Rank over Q, without computing the Smith form."""
    return sparse_rank(as_matrix(m).sparse_rows())


def group_from_smith(snf: SmithForm, size: int) -> AbelianGroup:
    """Cokernel of a map into ``Z^size`` with the given Smith form."""
    torsion = tuple(d for d in snf.diag[:snf.rank] if d > 1)
    return AbelianGroup(size - snf.rank, torsion)


def cokernel(m) -> AbelianGroup:
    """``Z^k / m Z^k`` for a square ``k x k`` integer matrix."""
    m = as_matrix(m)
    if not m.is_square:
        raise ValueError("cokernel is only defined here for square matrices")
    return group_from_smith(smith_normal_form(m), m.nrows)


def kernel_rank(m) -> int:
    m = as_matrix(m)
    if not m.is_square:
        raise ValueError("kernel_rank expects a square matrix")
    return m.nrows - rank(m)


def normalize_direct_sum(parts: Iterable[AbelianGroup]) -> AbelianGroup:
    """Direct sum of groups, presented as one invariant-factor chain."""
    parts = list(parts)
    free = sum(p.free_rank for p in parts)
    chain = chain_from_diagonal(t for p in parts for t in p.torsion)
    return AbelianGroup(free, tuple(t for t in chain if t > 1))
