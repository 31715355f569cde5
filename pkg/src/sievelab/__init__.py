"""Wheel double sieve over 6i-1 / 6i+1 with pair counts and analytic predictors."""

from .analytic import (
    EULER_GAMMA,
    correction_constant,
    divergence_trend,
    eta2,
    eta4_empirical,
    mertens_lower_bound,
    mu,
    predict,
    sifting_product,
    twin_prime_constant,
)
from .claims import ClaimReport, run_paper_checks
from .counting import (
    count_gap_pairs,
    count_goldbach,
    count_primes,
    count_twin_goldbach,
    count_twin_patterns,
    find_twin_goldbach_exceptions,
)
from .density import basis_order3_check, index_set, sumset_coverage
from .errors import CapacityError, DomainError, RangeError, ShapeError, SievelabError
from .segments import Segment, SegmentSpec, combine, count_nonzero, take
from .sieve import PrimeFlags, TwinFlags, build_flags, load_flags, save_flags, twin_flags
from .wheel import EvenClass, WheelClass, classify_even, composite_progressions, term

__version__ = "0.1.0"
