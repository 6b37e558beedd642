"""Seeded random matrices for property checks and experiments."""
from __future__ import annotations

import random

from .linalg import IntMatrix


def elementary_product(n: int, rng: random.Random, steps: int = 30, bound: int = 2) -> IntMatrix:
    """Product of up to ``steps`` elementary matrices ``I + c E_ij``, |c| <= bound.

    The result lies in SL(n, Z).
    """
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        return IntMatrix.from_rows(rows)
    for _ in range(rng.randint(1, steps)):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([x for x in range(-bound, bound + 1) if x])
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return IntMatrix.from_rows(rows)


def random_unimodular(n: int, rng: random.Random, steps: int = 30, bound: int = 2) -> IntMatrix:
    """Like :func:`elementary_product` but with determinant +1 or -1 at random."""
    m = elementary_product(n, rng, steps, bound)
    if rng.random() < 0.5:
        rows = m.to_rows()
        k = rng.randrange(n)
        rows[k] = [-x for x in rows[k]]
        m = IntMatrix.from_rows(rows)
    return m


def random_unit_upper(n: int, rng: random.Random, bound: int = 3) -> IntMatrix:
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rng.randint(-bound, bound)
    return IntMatrix.from_rows(rows)


def random_heart(n: int, rng: random.Random, bound: int = 3) -> IntMatrix:
    """Unit upper-triangular with every superdiagonal entry nonzero."""
    rows = random_unit_upper(n, rng, bound).to_rows()
    for i in range(n - 1):
        while rows[i][i + 1] == 0:
            rows[i][i + 1] = rng.randint(-bound, bound)
    return IntMatrix.from_rows(rows)


def random_matrix(nrows: int, ncols: int, rng: random.Random, bound: int = 20) -> IntMatrix:
    return IntMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)])
