"""K-theory of crossed products of tori by integer matrices, in exact arithmetic."""
from .exterior import SubsetBasis, exterior_power, minor, subsets_lex
from .ktheory import (
    K0Element,
    KTheoryReport,
    PreconditionError,
    Sign,
    ThetaInterval,
    TorusAutomorphism,
    anzai_matrix,
    ascending_matrix,
    dn_k_groups,
    furstenberg_matrix,
    is_unipotent_max_degree,
    k0_sign,
    k_groups,
    k_rank,
    poincare_check,
    search_ascending,
    trace_range_report,
)
from .linalg import (
    AbelianGroup,
    IntMatrix,
    SmithForm,
    cokernel,
    kernel_rank,
    normalize_direct_sum,
    rank,
    smith_normal_form,
)
from .ranks import (
    LaurentPoly,
    RankResult,
    a_n_constant_term,
    a_n_partitions,
    a_n_subset_sum,
    asymptotic_estimate,
    partition_count,
    van_lint_integral,
)

__all__ = [
    "AbelianGroup",
    "IntMatrix",
    "K0Element",
    "KTheoryReport",
    "LaurentPoly",
    "PreconditionError",
    "RankResult",
    "Sign",
    "SmithForm",
    "SubsetBasis",
    "ThetaInterval",
    "TorusAutomorphism",
    "a_n_constant_term",
    "a_n_partitions",
    "a_n_subset_sum",
    "anzai_matrix",
    "ascending_matrix",
    "asymptotic_estimate",
    "cokernel",
    "dn_k_groups",
    "exterior_power",
    "furstenberg_matrix",
    "is_unipotent_max_degree",
    "k0_sign",
    "k_groups",
    "k_rank",
    "kernel_rank",
    "minor",
    "normalize_direct_sum",
    "partition_count",
    "poincare_check",
    "rank",
    "search_ascending",
    "smith_normal_form",
    "subsets_lex",
    "trace_range_report",
    "van_lint_integral",
]

__version__ = "0.1.0"
