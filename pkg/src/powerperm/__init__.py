"""Permutations induced on base-p digit blocks by integer powers.

For a prime p and exponent n, the map x -> x**n scrambles a block of l
base-p digits of the result bijectively as x runs over an arithmetic
progression p*x' + r. This package computes the block offset, builds and
inverts the induced permutations, recovers roots from exact powers, and
provides the binomial-valuation machinery behind the bijectivity argument.
"""

from .analysis import (
    AuditResult,
    CycleReport,
    ScatterData,
    audit_bijectivity,
    cycle_structure,
    export_scatter,
)
from .binomial import (
    DIRECT_BOUND,
    ValuationReport,
    kummer_carries,
    valuation_direct,
    valuation_legendre,
    valuation_lemma1,
)
from .coding import (
    CodingParams,
    PermutationTable,
    PowerSpec,
    compose_decomposition,
    decode,
    decode_exponent,
    encode,
    encode_via_composition,
    extended_shift,
    iter_codes,
    permutation_table,
    reconstruct,
    shift,
)
from .errors import (
    BottomExceedsTop,
    DigitOutOfRange,
    DomainError,
    EnumerationBoundExceeded,
    InternalBijectivityViolation,
    NotComposite,
    NotPrime,
    OracleBoundExceeded,
    OutOfRange,
    PowerPermError,
    UndefinedForZero,
    UnsupportedSize,
    ZeroModulus,
)
from .padic import (
    DigitString,
    PAdicDecomposition,
    PrimeBase,
    decompose,
    from_digits,
    pow_mod,
    to_digits,
    totient_prime_power,
    validate_prime,
    valuation,
)

__version__ = "0.1.0"

__all__ = [
    "AuditResult",
    "BottomExceedsTop",
    "CodingParams",
    "CycleReport",
    "DIRECT_BOUND",
    "DigitOutOfRange",
    "DigitString",
    "DomainError",
    "EnumerationBoundExceeded",
    "InternalBijectivityViolation",
    "NotComposite",
    "NotPrime",
    "OracleBoundExceeded",
    "OutOfRange",
    "PAdicDecomposition",
    "PermutationTable",
    "PowerPermError",
    "PowerSpec",
    "PrimeBase",
    "ScatterData",
    "UndefinedForZero",
    "UnsupportedSize",
    "ValuationReport",
    "ZeroModulus",
    "audit_bijectivity",
    "compose_decomposition",
    "cycle_structure",
    "decode",
    "decode_exponent",
    "decompose",
    "encode",
    "encode_via_composition",
    "export_scatter",
    "extended_shift",
    "from_digits",
    "iter_codes",
    "kummer_carries",
    "permutation_table",
    "pow_mod",
    "reconstruct",
    "shift",
    "to_digits",
    "totient_prime_power",
    "validate_prime",
    "valuation",
    "valuation_direct",
    "valuation_legendre",
    "valuation_lemma1",
]
