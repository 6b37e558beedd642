"""The rank sequence a_n = rank K0 = rank K1 for the Anzai matrices.

Four routes to the same integers:

* ``matrix``: kernel ranks of the exterior powers (see :func:`ktheory.k_rank`),
* ``partition``: ``sum_r P(n, r, floor(r(n+1)/2))``,
* ``constant_term``: constant term of ``prod (1 + z^j)`` type products,
* ``subset_sum``: signed subset sums hitting 0 (or 0/1 for even n).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np
from scipy.integrate import simpson

METHODS = ("matrix", "partition", "constant_term", "subset_sum")


@dataclass(frozen=True)
class RankResult:
    n: int
    value: int
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")


def _check_n(n: int):
    if n < 1:
        raise ValueError("n must be at least 1")


# ---------------------------------------------------------------------------
# partitions into distinct parts


def partition_table(n: int, max_r: int | None = None, max_k: int | None = None) -> list[list[int]]:
    """``table[r][k]`` = number of r-subsets of {1..n} summing to k."""
    max_r = n if max_r is None else min(max_r, n)
    max_k = n * (n + 1) // 2 if max_k is None else max_k
    table = [[0] * (max_k + 1) for _ in range(max_r + 1)]
    table[0][0] = 1
    for item in range(1, n + 1):
        for r in range(min(item, max_r), 0, -1):
            dst, src = table[r], table[r - 1]
            for k in range(max_k, item - 1, -1):
                if src[k - item]:
                    dst[k] += src[k - item]
    return table


def partition_count(n: int, r: int, k: int) -> int:
    """P(n, r, k): ways to write k as a sum of r distinct integers in [1, n]."""
    if n < 0 or r < 0 or k < 0 or r > n:
        return 0
    if r == 0:
        return int(k == 0)
    if k > n * (n + 1) // 2:
        return 0
    return partition_table(n, r, k)[r][k]


def a_n_partitions(n: int) -> RankResult:
    _check_n(n)
    table = partition_table(n)
    value = sum(table[r][r * (n + 1) // 2] for r in range(n + 1))
    return RankResult(n, value, "partition")


# ---------------------------------------------------------------------------
# Laurent polynomials


@dataclass(frozen=True)
class LaurentPoly:
    """``sum_i coeffs[i] * z^(min_degree + i)`` with trimmed ends."""

    min_degree: int
    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        object.__setattr__(self, "coeffs", tuple(c[lo:hi]))
        object.__setattr__(self, "min_degree", self.min_degree + lo if hi > lo else 0)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> LaurentPoly:
        return cls(degree, (coeff,))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> LaurentPoly:
        if not terms:
            return cls(0, ())
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(d, 0) for d in range(lo, hi + 1)))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        terms = self.terms()
        for d, c in other.terms().items():
            terms[d] = terms.get(d, 0) + c
        return LaurentPoly.from_terms(terms)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero() or other.is_zero():
            return LaurentPoly(0, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, b in enumerate(other.coeffs):
            if b:
                for i, a in enumerate(self.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.min_degree + other.min_degree, tuple(out))

    def coefficient(self, degree: int) -> int:
        i = degree - self.min_degree
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def constant_term(self) -> int:
        return self.coefficient(0)

    def terms(self) -> dict[int, int]:
        return {self.min_degree + i: c for i, c in enumerate(self.coeffs) if c}


def _one_plus(degree: int) -> LaurentPoly:
    return LaurentPoly.from_terms({0: 1}) + LaurentPoly.monomial(degree)


def anzai_laurent_product(n: int) -> LaurentPoly:
    """``prod_{j=-m}^{m} (1+z^j)`` for n = 2m+1, ``(1+z) prod_{j=-m+1}^{m} (1+z^(2j-1))`` for n = 2m."""
    _check_n(n)
    m = n // 2
    if n % 2:
        factors = [_one_plus(j) for j in range(-m, m + 1)]
    else:
        factors = [_one_plus(1)] + [_one_plus(2 * j - 1) for j in range(-m + 1, m + 1)]
    prod = LaurentPoly.from_terms({0: 1})
    for f in factors:
        prod = prod * f
    return prod


def a_n_constant_term(n: int) -> RankResult:
    return RankResult(n, anzai_laurent_product(n).constant_term(), "constant_term")


# ---------------------------------------------------------------------------
# signed subset sums


def subset_sum_ground_set(n: int) -> list[int]:
    _check_n(n)
    m = n // 2
    if n % 2:
        return list(range(-m, m + 1))
    return [2 * k - 1 for k in range(-m + 1, m + 1)]


def count_subset_sums(values: Iterable[int]) -> dict[int, int]:
    """Map each reachable sum to the number of subsets (as index sets) giving it."""
    counts = {0: 1}
    for v in values:
        nxt = dict(counts)
        for s, c in counts.items():
            nxt[s + v] = nxt.get(s + v, 0) + c
        counts = nxt
    return counts


def a_n_subset_sum(n: int) -> RankResult:
    counts = count_subset_sums(subset_sum_ground_set(n))
    if n % 2:
        value = counts.get(0, 0)
    else:
        value = counts.get(0, 0) + counts.get(1, 0)
    return RankResult(n, value, "subset_sum")


# ---------------------------------------------------------------------------
# asymptotics


ASYMPTOTIC_CONSTANT = math.sqrt(24 / math.pi)


def asymptotic_estimate(n: int) -> float:
    """Leading-order growth ``sqrt(24/pi) * 2^n * n^(-3/2)``."""
    _check_n(n)
    return ASYMPTOTIC_CONSTANT * 2.0 ** n * n ** -1.5


@dataclass(frozen=True)
class QuadratureEstimate:
    value: float
    error_estimate: float
    samples: int


def van_lint_integral(n: int, samples: int = 4000) -> QuadratureEstimate:
    """Composite Simpson estimate of ``2^(2n+2)/pi * int_0^{pi/2} prod_k cos^2(kx) dx``.

    The exact value is the number of subsets of {-n..n} summing to zero,
    i.e. a_{2n+1}.  The error estimate is the change against half the samples.
    """
    _check_n(n)
    if samples < 1000:
        raise ValueError("use at least 1000 samples")
    samples += samples % 2

    def simpson_at(k: int) -> float:
        x = np.linspace(0.0, math.pi / 2, k + 1)
        y = np.ones_like(x)
        for j in range(1, n + 1):
            y *= np.cos(j * x) ** 2
        return float(simpson(y, x=x)) * 2.0 ** (2 * n + 2) / math.pi

    fine = simpson_at(samples)
    coarse = simpson_at(samples // 2)
    return QuadratureEstimate(fine, abs(fine - coarse), samples)


# ---------------------------------------------------------------------------


def a_n(n: int, method: str = "subset_sum") -> RankResult:
    if method == "partition":
        return a_n_partitions(n)
    if method == "constant_term":
        return a_n_constant_term(n)
    if method == "subset_sum":
        return a_n_subset_sum(n)
    if method == "matrix":
        from .ktheory import anzai_matrix, k_rank
        return RankResult(n, k_rank(anzai_matrix(n)), "matrix")
    raise ValueError(f"unknown method {method!r}")


def write_bfile(path, values: Iterable[tuple[int, int]]) -> None:
    """OEIS b-file: one ``n a_n`` pair per line."""
    lines = [f"{n} {v}\n" for n, v in values]
    Path(path).write_text("".join(lines))


def read_bfile(path) -> list[tuple[int, int]]:
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, v = line.split()
        out.append((int(n), int(v)))
    return out
