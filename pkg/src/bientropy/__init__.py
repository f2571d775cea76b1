"""BiEntropy: approximate entropy of finite binary strings."""
from .bitstring import (
    APERIODIC,
    NPERIODIC,
    PERIODIC,
    BitString,
    PeriodicityReport,
    classify,
    derivative,
    derivatives,
    find_eventual_period,
    find_period,
    ones_fraction,
    parse_bits,
    reverse,
)
from .entropy import (
    BIEN_MAX_BITS,
    EntropyProfile,
    WeightingScheme,
    bien,
    bien_many,
    entropy_profile,
    score,
    score_many,
    shannon_entropy,
    tbien,
    tbien_many,
)

__version__ = "0.1.0"
