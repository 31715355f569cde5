"""Finite-range densities and additive-basis coverage.

Sets are boolean membership arrays over ``0..limit`` (position 0 unused).
The L/R/T sets are index sets drawn from the wheel sieve; the order-3 sets
``PrimesWith1`` and ``TwinPrimes`` are sets of actual integers and do
include 2 and 3.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError
from .sieve import PrimeFlags, build_flags


class SetSource(enum.Enum):
    L = "L"
    R = "R"
    T = "T"
    PrimesWith1 = "PrimesWith1"
    TwinPrimes = "TwinPrimes"


@dataclass(frozen=True, eq=False)
class IndexSet:
    source: SetSource | str
    limit: int
    members: np.ndarray

    def __post_init__(self):
        if self.members.shape != (self.limit + 1,):
            raise ValueError("members must have length limit + 1")

    def elements(self) -> np.ndarray:
        return np.flatnonzero(self.members)


@dataclass(frozen=True)
class CoverageReport:
    limit: int
    missing: list[int]
    schnirelmann_prefix: float
    natural_estimate: float

    def to_dict(self) -> dict:
        return {
            "limit": self.limit,
            "missing": self.missing,
            "schnirelmann_prefix": self.schnirelmann_prefix,
            "natural_estimate": self.natural_estimate,
        }


def _primality_to(limit: int) -> np.ndarray:
    """``is_prime[v]`` for ``0 <= v <= limit``, including 2 and 3."""
    flags = build_flags(max(limit // 6 + 1, 1))
    out = np.zeros(limit + 1, dtype=bool)
    ps = flags.primes(limit)
    out[ps] = True
    out[[v for v in (2, 3) if v <= limit]] = True
    return out


def index_set(source: SetSource | str, limit: int, flags: PrimeFlags | None = None) -> IndexSet:
    """Build one of the named sets restricted to ``[1, limit]``."""
    source = SetSource(source)
    if limit < 1:
        raise DomainError("limit must be >= 1")
    members = np.zeros(limit + 1, dtype=bool)
    if source in (SetSource.L, SetSource.R, SetSource.T):
        flags = flags or build_flags(limit)
        if flags.m_max < limit:
            raise RangeError(f"sieve covers {flags.m_max} indices, need {limit}")
        fa, fb = flags.flags_a[: limit + 1], flags.flags_b[: limit + 1]
        members[:] = {SetSource.L: fa, SetSource.R: fb, SetSource.T: fa & fb}[source]
    else:
        prime = _primality_to(limit + 2)
        if source is SetSource.PrimesWith1:
            members[:] = prime[: limit + 1]
            members[1] = True
        else:
            twin_low = prime[:-2] & prime[2:]  # v and v + 2 both prime
            member = np.zeros(limit + 3, dtype=bool)
            member[:-2] |= twin_low
            member[2:] |= twin_low
            members[:] = member[: limit + 1]
    members[0] = False
    return IndexSet(source, limit, members)


def from_members(values, limit: int, label: str = "custom") -> IndexSet:
    members = np.zeros(limit + 1, dtype=bool)
    vals = np.asarray(list(values), dtype=np.int64)
    vals = vals[(vals >= 1) & (vals <= limit)]
    members[vals] = True
    return IndexSet(label, limit, members)


def _densities(covered: np.ndarray) -> tuple[float, float]:
    limit = len(covered) - 1
    prefix = np.cumsum(covered[1:])
    k = np.arange(1, limit + 1)
    return float(np.min(prefix / k)), float(prefix[-1] / limit)


def density(s: IndexSet) -> tuple[float, float]:
    """(Schnirelmann prefix minimum, natural-density estimate) at ``s.limit``."""
    return _densities(s.members)


def _sumset(x: np.ndarray, y: np.ndarray, limit: int) -> np.ndarray:
    """Boolean indicator of ``{a + b <= limit : a in x, b in y}``."""
    out = np.zeros(limit + 1, dtype=bool)
    xs, ys = np.flatnonzero(x[: limit + 1]), np.flatnonzero(y[: limit + 1])
    if len(xs) > len(ys):
        xs, y = ys, x
    for a in xs.tolist():
        if a > limit:
            break
        out[a:] |= y[: limit + 1 - a]
    return out


def _report(covered: np.ndarray, limit: int) -> CoverageReport:
    covered = covered.copy()
    covered[0] = False
    missing = (np.flatnonzero(~covered[1:]) + 1).tolist()
    schnirelmann, natural = _densities(covered)
    return CoverageReport(limit, missing, schnirelmann, natural)


def sumset_coverage(s1: IndexSet, s2: IndexSet, limit: int) -> CoverageReport:
    """Coverage of ``s1 (+) s2``: elements of either set plus pairwise sums."""
    if s1.limit < limit or s2.limit < limit:
        raise RangeError("source sets must reach the requested limit")
    x, y = s1.members[: limit + 1], s2.members[: limit + 1]
    covered = x | y | _sumset(x, y, limit)
    return _report(covered, limit)


def basis_order3_check(kind: SetSource | str, limit: int) -> CoverageReport:
    """Integers in ``[1, limit]`` that are not sums of at most three elements."""
    kind = SetSource(kind)
    if kind not in (SetSource.PrimesWith1, SetSource.TwinPrimes):
        raise DomainError("order-3 checks use PrimesWith1 or TwinPrimes")
    if limit < 2:
        raise DomainError("limit must be >= 2")
    base = index_set(kind, limit).members
    two = base | _sumset(base, base, limit)
    three = two | _sumset(two, base, limit)
    return _report(three, limit)
