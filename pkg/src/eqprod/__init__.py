"""Equal-product partition families: enumeration, admissibility, thresholds."""

from .core import (
    PRODUCT_BITS,
    PRODUCT_MAX,
    EmptyInput,
    FactoredInteger,
    IntPolynomial,
    NonPositivePart,
    PartitionMultiset,
    ProductOverflow,
    SearchBudgetExceeded,
    Triple,
    canonicalize,
    checked_product,
    factorize,
    signature,
)
from .partitions import (
    Family,
    disjoint_families,
    enumerate_partitions,
    equal_product_families,
    group_by_product,
)
from .product_side import (
    ChiCertificate,
    InfeasiblePadding,
    UnequalSignatures,
    WitnessPair,
    chi_from_witness,
    construct_prime_power_witness,
    construct_qu_witness,
    is_prime_power_admissible,
    is_product_admissible,
    verify_chi,
    witness_from_chi,
)
from .sum_side import (
    AdmissibilityReport,
    InvalidExtension,
    compute_report,
    excluded_n_check,
    extend_family,
    is_admissible,
    wizard_bus_numbers,
)
from .thresholds import (
    ConjectureCheck,
    ThresholdRecord,
    check_conjectures,
    has_r_family,
    render_bfile,
    render_csv,
    s_r_0,
    s_r_star,
    table_s_n0,
    table_s_star,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "ChiCertificate",
    "ConjectureCheck",
    "EmptyInput",
    "FactoredInteger",
    "Family",
    "InfeasiblePadding",
    "IntPolynomial",
    "InvalidExtension",
    "NonPositivePart",
    "PRODUCT_BITS",
    "PRODUCT_MAX",
    "PartitionMultiset",
    "ProductOverflow",
    "SearchBudgetExceeded",
    "ThresholdRecord",
    "Triple",
    "UnequalSignatures",
    "WitnessPair",
    "canonicalize",
    "check_conjectures",
    "checked_product",
    "chi_from_witness",
    "compute_report",
    "construct_prime_power_witness",
    "construct_qu_witness",
    "disjoint_families",
    "enumerate_partitions",
    "equal_product_families",
    "excluded_n_check",
    "extend_family",
    "factorize",
    "group_by_product",
    "has_r_family",
    "is_admissible",
    "is_prime_power_admissible",
    "is_product_admissible",
    "render_bfile",
    "render_csv",
    "s_r_0",
    "s_r_star",
    "signature",
    "table_s_n0",
    "table_s_star",
    "verify_chi",
    "wizard_bus_numbers",
    "witness_from_chi",
]
