"""K-groups of crossed products C(T^n) x_A Z from the integer matrix A.

With ``A_r = Lambda^r A - I`` acting on ``Lambda^r Z^n``::

    K0 = sum over r of  coker A_{2r}  +  ker A_{2r+1}
    K1 = sum over r of  coker A_{2r+1}  +  ker A_{2r}

Kernels of integer matrices are free, so only their ranks are kept.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from math import comb
from typing import Mapping, Sequence

from .exterior import exterior_minus_identity
from .linalg import (
    AbelianGroup,
    IntMatrix,
    as_matrix,
    determinant,
    group_from_smith,
    normalize_direct_sum,
    smith_from_sparse,
    sparse_rank,
)


class PreconditionError(ValueError):
    """A mathematical precondition of an operation does not hold."""


@dataclass(frozen=True)
class TorusAutomorphism:
    n: int
    matrix: IntMatrix
    det: int
    divisibility_warning: bool = False

    @classmethod
    def from_matrix(cls, m, divisibility_warning: bool = False) -> TorusAutomorphism:
        m = as_matrix(m)
        if not m.is_square or m.nrows == 0:
            raise ValueError(f"expected a nonempty square matrix, got shape {m.shape}")
        det = determinant(m)
        if abs(det) != 1:
            raise PreconditionError(f"matrix not in GL(n,Z) (det = {det})")
        return cls(m.nrows, m, det, divisibility_warning)


def anzai_matrix(n: int) -> TorusAutomorphism:
    """The full n x n Jordan block with eigenvalue 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = [[1 if j in (i, i + 1) else 0 for j in range(n)] for i in range(n)]
    return TorusAutomorphism(n, IntMatrix.from_rows(rows), 1)


def furstenberg_matrix(n: int, b: Mapping[tuple[int, int], int]) -> TorusAutomorphism:
    """Unit upper-triangular matrix with strict-upper entries ``b[(i, j)]``.

    Keys are 1-based with ``i < j``; missing keys are zero.  Every
    superdiagonal entry ``b[(i, i+1)]`` must be nonzero.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for (i, j), v in b.items():
        if not 1 <= i < j <= n:
            raise ValueError(f"exponent index ({i}, {j}) is not strictly upper triangular")
        rows[i - 1][j - 1] = int(v)
    for i in range(n - 1):
        if rows[i][i + 1] == 0:
            raise ValueError(f"superdiagonal entry b[{i + 1},{i + 2}] must be nonzero")
    return TorusAutomorphism(n, IntMatrix.from_rows(rows), 1)


def ascending_matrix(k: Sequence[int]) -> TorusAutomorphism:
    """Superdiagonal ``k_1, ..., k_{n-1}``, zeros elsewhere above the diagonal.

    A broken chain ``k_i | k_{i+1}`` is flagged, not rejected.
    """
    k = [int(x) for x in k]
    if any(x == 0 for x in k):
        raise ValueError("ascending exponents must be nonzero")
    n = len(k) + 1
    auto = furstenberg_matrix(n, {(i + 1, i + 2): x for i, x in enumerate(k)})
    broken = any(b % a for a, b in zip(k, k[1:]))
    return TorusAutomorphism(n, auto.matrix, 1, divisibility_warning=broken)


# ---------------------------------------------------------------------------
# the report


@dataclass(frozen=True)
class DegreeComponent:
    r: int
    kernel_rank: int
    cokernel: AbelianGroup

    def to_json(self) -> dict:
        return {"r": self.r, "kernel_rank": self.kernel_rank, "cokernel": self.cokernel.to_json()}

    @classmethod
    def from_json(cls, obj) -> DegreeComponent:
        return cls(int(obj["r"]), int(obj["kernel_rank"]), AbelianGroup.from_json(obj["cokernel"]))


@dataclass(frozen=True)
class KTheoryReport:
    n: int
    det: int
    k0: AbelianGroup
    k1: AbelianGroup
    per_r: tuple
    unipotent_max_degree: bool
    poincare_duality: bool | None = None

    @classmethod
    def assemble(cls, n: int, det: int, per_r: Sequence[DegreeComponent],
                 unipotent: bool) -> KTheoryReport:
        per_r = tuple(sorted(per_r, key=lambda c: c.r))
        even = [c for c in per_r if c.r % 2 == 0]
        odd = [c for c in per_r if c.r % 2 == 1]
        k0 = normalize_direct_sum(
            [c.cokernel for c in even] + [AbelianGroup.free(c.kernel_rank) for c in odd])
        k1 = normalize_direct_sum(
            [c.cokernel for c in odd] + [AbelianGroup.free(c.kernel_rank) for c in even])
        duality = None
        if det == 1:
            duality = all(c.cokernel == per_r[n - c.r].cokernel for c in per_r)
        return cls(n, det, k0, k1, per_r, unipotent, duality)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "det": self.det,
            "K0": self.k0.to_json(),
            "K1": self.k1.to_json(),
            "per_r": [c.to_json() for c in self.per_r],
            "unipotent_max_degree": self.unipotent_max_degree,
            "poincare_duality": self.poincare_duality,
        }

    @classmethod
    def from_json(cls, obj) -> KTheoryReport:
        return cls(
            int(obj["n"]), int(obj["det"]),
            AbelianGroup.from_json(obj["K0"]), AbelianGroup.from_json(obj["K1"]),
            tuple(DegreeComponent.from_json(c) for c in obj["per_r"]),
            bool(obj["unipotent_max_degree"]), obj.get("poincare_duality"),
        )

    def render_text(self) -> str:
        flag = {True: "yes", False: "no", None: "n/a (det = -1)"}
        lines = [
            f"n = {self.n}, det = {self.det}",
            f"unipotent of maximal degree: {flag[self.unipotent_max_degree]}",
            f"Poincare duality of cokernels: {flag[self.poincare_duality]}",
            "",
            f"{'r':>3}  {'ker':>5}  coker(Lambda^r A - I)",
        ]
        for c in self.per_r:
            kernel = f"Z^{c.kernel_rank}" if c.kernel_rank != 1 else "Z"
            lines.append(f"{c.r:>3}  {kernel if c.kernel_rank else '0':>5}  {c.cokernel}")
        lines += ["", f"K0 = {self.k0}", f"K1 = {self.k1}"]
        return "\n".join(lines) + "\n"


def _automorphism(a) -> TorusAutomorphism:
    return a if isinstance(a, TorusAutomorphism) else TorusAutomorphism.from_matrix(a)


def degree_component(a: TorusAutomorphism, r: int) -> DegreeComponent:
    size = comb(a.n, r)
    snf = smith_from_sparse(exterior_minus_identity(a.matrix, r), size)
    return DegreeComponent(r, size - snf.rank, group_from_smith(snf, size))


def k_groups(a) -> KTheoryReport:
    a = _automorphism(a)
    per_r = [degree_component(a, r) for r in range(a.n + 1)]
    return KTheoryReport.assemble(a.n, a.det, per_r, is_unipotent_max_degree(a))


def k_rank(a) -> int:
    """Common rank of K0 and K1: the sum of kernel ranks, no Smith forms needed."""
    a = _automorphism(a)
    total = 0
    for r in range(a.n + 1):
        total += comb(a.n, r) - sparse_rank(exterior_minus_identity(a.matrix, r))
    return total


def is_unipotent_max_degree(a) -> bool:
    """True iff ``(A - I)^n == 0`` while ``(A - I)^(n-1) != 0``."""
    m = a.matrix if isinstance(a, TorusAutomorphism) else as_matrix(a)
    n = m.nrows
    nil = m - IntMatrix.identity(n)
    before = nil ** (n - 1)
    return not before.is_zero() and (before @ nil).is_zero()


@dataclass(frozen=True)
class DualityRow:
    r: int
    coker_r: AbelianGroup
    coker_dual: AbelianGroup

    @property
    def equal(self) -> bool:
        return self.coker_r == self.coker_dual


def poincare_check(a) -> list[DualityRow]:
    """Compare coker(Lambda^r A - I) with coker(Lambda^(n-r) A - I) for every r."""
    a = _automorphism(a)
    if a.det != 1:
        raise PreconditionError("Poincare duality needs det A = 1")
    cokers = [degree_component(a, r).cokernel for r in range(a.n + 1)]
    return [DualityRow(r, cokers[r], cokers[a.n - r]) for r in range(a.n + 1)]


def dn_k_groups(n: int) -> KTheoryReport:
    """K-groups of the group C*-algebra of the n-th Heisenberg-type group D_n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return k_groups(anzai_matrix(n + 1))


# ---------------------------------------------------------------------------
# order structure on K0


@dataclass(frozen=True)
class ThetaInterval:
    """Closed rational enclosure ``[lo, hi]`` of the rotation number.

    Irrationality of the enclosed value is the caller's business.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not 0 < lo <= hi < 1:
            raise ValueError(f"need 0 < lo <= hi < 1, got [{lo}, {hi}]")

    @classmethod
    def parse(cls, lo: str, hi: str) -> ThetaInterval:
        return cls(Fraction(lo), Fraction(hi))

    def trace_bounds(self, a: int, b: int) -> tuple[Fraction, Fraction]:
        """Exact range of ``a + b*theta`` over the interval."""
        ends = (a + b * self.lo, a + b * self.hi)
        return min(ends), max(ends)


@dataclass(frozen=True)
class K0Element:
    """``(a[1] + b[p_theta], c, t)`` in the split form of K0."""

    a: int
    b: int
    c: tuple = ()
    t: tuple = ()

    def check_against(self, group: AbelianGroup):
        if group.free_rank < 2:
            raise ValueError("the order description needs free rank >= 2")
        if len(self.c) != group.free_rank - 2:
            raise ValueError(
                f"expected {group.free_rank - 2} free coordinates beyond [1], [p_theta], "
                f"got {len(self.c)}")
        if len(self.t) != len(group.torsion):
            raise ValueError(
                f"expected {len(group.torsion)} torsion coordinates, got {len(self.t)}")

    def is_zero(self, group: AbelianGroup | None = None) -> bool:
        if self.a or self.b or any(self.c):
            return False
        if group is None:
            return not any(self.t)
        return all(x % d == 0 for x, d in zip(self.t, group.torsion))


class Sign(enum.Enum):
    POSITIVE = "positive"
    ZERO = "zero"
    NEGATIVE = "negative"
    INDETERMINATE = "indeterminate"


def k0_sign(e: K0Element, theta: ThetaInterval, group: AbelianGroup | None = None) -> Sign:
    """Classify ``e`` against the positive cone ``{a + b*theta > 0} U {0}``.

    A nonzero element whose trace ``a + b*theta`` is not certified nonzero on
    the whole interval is INDETERMINATE.  That includes ``a = b = 0`` with
    nonzero ``c`` or ``t``: trace zero, so not in the cone.
    """
    if not isinstance(e, K0Element):
        raise ValueError("expected a K0Element")
    if group is not None:
        e.check_against(group)
    if e.is_zero(group):
        return Sign.ZERO
    lo, hi = theta.trace_bounds(e.a, e.b)
    if lo > 0:
        return Sign.POSITIVE
    if hi < 0:
        return Sign.NEGATIVE
    return Sign.INDETERMINATE


def in_positive_cone(e: K0Element, theta: ThetaInterval, group: AbelianGroup | None = None) -> bool:
    return k0_sign(e, theta, group) in (Sign.POSITIVE, Sign.ZERO)


def describe_sign(e: K0Element, sign: Sign) -> str:
    if sign is Sign.INDETERMINATE and e.a == 0 and e.b == 0:
        return "zero-trace nonzero element, not in K0+"
    return sign.value


TRACE_RANGE = "Z + Z*theta"
CONE = "{(a[1] + b[p_theta], c, t) : a + b*theta > 0} U {0}"


def trace_range_report(a, theta: ThetaInterval, report: KTheoryReport | None = None) -> dict:
    """K-theory, trace range and positive cone of a Furstenberg crossed product.

    The cone section is only emitted for matrices unipotent of maximal degree;
    otherwise a warning is recorded and the rest of the report still follows.
    """
    a = _automorphism(a)
    report = report or k_groups(a)
    out = {
        "n": a.n,
        "det": a.det,
        "K0": report.k0.to_json(),
        "K1": report.k1.to_json(),
        "rank": report.k0.free_rank,
        "K0_torsion": list(report.k0.torsion),
        "K1_torsion": list(report.k1.torsion),
        "theta": {"lo": str(theta.lo), "hi": str(theta.hi)},
        "warnings": [],
    }
    if report.unipotent_max_degree and report.k0.free_rank >= 2:
        out["trace_range"] = TRACE_RANGE
        out["positive_cone"] = CONE
        out["trace_map"] = "tau(a[1] + b[p_theta], c, t) = a + b*theta"
    else:
        out["warnings"].append(
            "matrix is not unipotent of maximal degree; order structure omitted")
    return out


def render_trace_report(rep: dict) -> str:
    lines = [
        f"n = {rep['n']}, det = {rep['det']}",
        f"K0 = {AbelianGroup.from_json(rep['K0'])}",
        f"K1 = {AbelianGroup.from_json(rep['K1'])}",
        f"rank = {rep['rank']}",
        f"theta in [{rep['theta']['lo']}, {rep['theta']['hi']}]",
    ]
    if "trace_range" in rep:
        lines += [
            f"trace range: tau_*(K0) = {rep['trace_range']}",
            f"trace map:   {rep['trace_map']}",
            f"positive cone: {rep['positive_cone']}",
        ]
    for w in rep["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# ascending Furstenberg parameter search


def ascending_chains(length: int, k_max: int):
    """All ``(k_1, ..., k_length)`` with ``1 <= k_i <= k_max`` and ``k_i | k_{i+1}``."""
    def extend(prefix):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        step = prefix[-1] if prefix else 1
        for k in range(step, k_max + 1, step):
            yield from extend(prefix + [k])
    yield from extend([])


@dataclass
class AscendingSearch:
    n: int
    k_max: int
    groups: dict = field(default_factory=dict)  # tuple -> (K0, K1)

    @property
    def collisions(self) -> list[list[tuple]]:
        key = lambda item: (item[1][0], item[1][1])
        out = []
        for _, members in groupby(sorted(self.groups.items(), key=key), key=key):
            tuples = sorted(t for t, _ in members)
            if len(tuples) >= 2:
                out.append(tuples)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k_max": self.k_max,
            "tuples": [
                {"k": list(t), "K0": g0.to_json(), "K1": g1.to_json()}
                for t, (g0, g1) in sorted(self.groups.items())
            ],
            "collisions": [
                {"tuples": [list(t) for t in c],
                 "K0": self.groups[c[0]][0].to_json(),
                 "K1": self.groups[c[0]][1].to_json()}
                for c in self.collisions
            ],
        }


def search_ascending(n: int, k_max: int) -> AscendingSearch:
    """K-theory of every ascending Furstenberg matrix with parameters up to ``k_max``.

    Coinciding (K0, K1) do not imply isomorphic algebras; this is an
    experiment harness.
    """
    if n < 2 or k_max < 1:
        raise ValueError("need n >= 2 and k_max >= 1")
    out = AscendingSearch(n, k_max)
    for ks in ascending_chains(n - 1, k_max):
        rep = k_groups(ascending_matrix(ks))
        out.groups[ks] = (rep.k0, rep.k1)
    return out
