"""Covering constructions, exponent halving, and empirical gap scanning
for the set of sums of two squares."""

from .arith import (
    CapacityError,
    FactoredInteger,
    Factorization,
    factorize,
    integer_log,
    is_prime,
    mod_inverse,
    prime_count,
    sieve_primes,
    valuation,
)
from .construction import (
    Construction,
    CoveringCertificate,
    CoveringReport,
    ElementCheck,
    InadmissibleModulusError,
    ShiftRangeError,
    construction_from_json,
    construction_to_json,
    covering_certificate,
    interval_check,
    modulus_growth,
    richards_construction,
    richards_modulus,
    richards_shift,
    verify_covering,
)
from .halving import (
    HalvingResult,
    NoGoodIntervalError,
    efficiency_report,
    enumerate_bad_n,
    exceptional_pairs,
    find_gap_interval,
    halved_modulus,
    halving_result_to_json,
    has_odd_cover,
    reduced_shift,
    small_part,
    small_prime_contribution,
)
from .oracle import (
    Member,
    NonMember,
    OddValuation,
    TwoPowerForm,
    Unknown,
    certify_non_membership,
    classify,
    membership_sieve,
    two_square_decomposition,
)
from .scanner import (
    GAP_RATE_HALVED,
    GAP_RATE_PLAIN,
    GapRecord,
    max_gap,
    records_to_csv,
    scan_records,
    trend_report,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "Construction",
    "CoveringCertificate",
    "CoveringReport",
    "ElementCheck",
    "FactoredInteger",
    "Factorization",
    "GAP_RATE_HALVED",
    "GAP_RATE_PLAIN",
    "GapRecord",
    "HalvingResult",
    "InadmissibleModulusError",
    "Member",
    "NoGoodIntervalError",
    "NonMember",
    "OddValuation",
    "ShiftRangeError",
    "TwoPowerForm",
    "Unknown",
    "certify_non_membership",
    "classify",
    "construction_from_json",
    "construction_to_json",
    "covering_certificate",
    "efficiency_report",
    "enumerate_bad_n",
    "exceptional_pairs",
    "factorize",
    "find_gap_interval",
    "halved_modulus",
    "halving_result_to_json",
    "has_odd_cover",
    "integer_log",
    "interval_check",
    "is_prime",
    "max_gap",
    "membership_sieve",
    "mod_inverse",
    "modulus_growth",
    "prime_count",
    "records_to_csv",
    "reduced_shift",
    "richards_construction",
    "richards_modulus",
    "richards_shift",
    "scan_records",
    "sieve_primes",
    "small_part",
    "small_prime_contribution",
    "trend_report",
    "two_square_decomposition",
    "valuation",
    "verify_covering",
]
