"""Binary additive counts as windowed AND + popcount over the sieve bitmaps.

None of the counts involve the primes 2 and 3.  In particular the twin
count omits the pair (3, 5), so ``count_gap_pairs(flags, 2, 10**6)`` is
8168, one less than standard tables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError
from .sieve import PrimeFlags, TwinFlags
from .wheel import EvenKind, WheelClass, classify_even


class Construction(enum.Enum):
    AshiftMinusB = "AshiftMinusB"  # g = 6m'-2: a_{i+m'} - b_i
    AA_plus_BB = "AA_plus_BB"  # g = 6m': (a_{i+m'} - a_i) and (b_{i+m'} - b_i)
    BshiftMinusA = "BshiftMinusA"  # g = 6m'+2: b_{i+m'} - a_i
    TwinDirect = "TwinDirect"  # g = 2: b_i - a_i


@dataclass(frozen=True)
class GapCount:
    g: int
    n: int
    count: int
    construction_used: Construction


@dataclass(frozen=True)
class GoldbachCount:
    g: int
    count: int
    raw_half: float
    klass: EvenKind
    m: int


@dataclass(frozen=True)
class TwinPatternCount:
    shift: int
    m: int
    count: int


def _and_count(x: np.ndarray, y: np.ndarray) -> int:
    return int(np.count_nonzero(x & y))


def max_index(klass: WheelClass, n: int) -> int:
    """Largest ``i`` with ``term(klass, i) <= n`` (0 if none)."""
    i = (n + 1) // 6 if klass is WheelClass.A else (n - 1) // 6
    return max(i, 0)


def _need(m_max: int, top: int) -> None:
    if top > m_max:
        raise RangeError(f"window needs index {top}, sieve covers {m_max}")


def count_primes(flags: PrimeFlags, klass: WheelClass, n: int) -> int:
    """Number of primes ``p <= n`` in the class (primes 2 and 3 never counted)."""
    top = max_index(klass, n)
    _need(flags.m_max, top)
    bits = flags.flags_a if klass is WheelClass.A else flags.flags_b
    return int(np.count_nonzero(bits[1 : top + 1]))


def count_gap_pairs(flags: PrimeFlags, g: int, n: int) -> GapCount:
    """Pairs of primes ``(p, p + g)`` with ``5 <= p <= n``."""
    if g < 2 or g % 2:
        raise DomainError(f"gap must be an even integer >= 2, got {g}")
    fa, fb = flags.flags_a, flags.flags_b
    if g == 2:
        top = max_index(WheelClass.A, n)
        _need(flags.m_max, top)
        return GapCount(g, n, _and_count(fa[1 : top + 1], fb[1 : top + 1]), Construction.TwinDirect)

    ec = classify_even(g)
    s = ec.m
    if ec.klass is EvenKind.G1:
        # smaller prime b_i, larger a_{i+s}
        top = max_index(WheelClass.B, n)
        _need(flags.m_max, top + s)
        count = _and_count(fb[1 : top + 1], fa[1 + s : top + s + 1])
        construction = Construction.AshiftMinusB
    elif ec.klass is EvenKind.G3:
        top = max_index(WheelClass.A, n)
        _need(flags.m_max, top + s)
        count = _and_count(fa[1 : top + 1], fb[1 + s : top + s + 1])
        construction = Construction.BshiftMinusA
    else:
        ta, tb = max_index(WheelClass.A, n), max_index(WheelClass.B, n)
        _need(flags.m_max, max(ta, tb) + s)
        count = _and_count(fa[1 : ta + 1], fa[1 + s : ta + s + 1]) + _and_count(
            fb[1 : tb + 1], fb[1 + s : tb + s + 1]
        )
        construction = Construction.AA_plus_BB
    return GapCount(g, n, count, construction)


def count_goldbach(flags: PrimeFlags, g: int) -> GoldbachCount:
    """Unordered representations ``g = p + q`` with primes ``5 <= p <= q``.

    ``raw_half`` is half the number of live cells in the full symmetric
    direct + inverse segment, which undercounts by 1/2 when ``g / 2`` is
    itself prime.  For ``g = 6m`` the summands come from different classes and
    ``raw_half`` equals ``count``.
    """
    if g < 10 or g % 2:
        raise DomainError(f"expected an even integer >= 10, got {g}")
    ec = classify_even(g)
    m = ec.m
    _need(flags.m_max, m - 1)
    # i + j = m in every class
    fa, fb = flags.flags_a, flags.flags_b
    if ec.klass is EvenKind.G2:
        count = _and_count(fa[1:m], fb[m - 1 : 0 : -1])
        return GoldbachCount(g, count, float(count), ec.klass, m)
    bits = fa if ec.klass is EvenKind.G1 else fb
    full = _and_count(bits[1:m], bits[m - 1 : 0 : -1])
    half = m // 2
    count = _and_count(bits[1 : half + 1], bits[m - 1 : m - half - 1 : -1])
    return GoldbachCount(g, count, 0.5 * full, ec.klass, m)


def count_twin_patterns(twin: TwinFlags, shift: int, m: int) -> TwinPatternCount:
    """Indices ``i <= m`` with ``t_i`` and ``t_{i+shift}`` both set.

    ``shift = 1`` counts prime quadruplets ``(p, p+2, p+6, p+8)``.
    """
    if shift < 0 or m < 0:
        raise DomainError("shift and m must be non-negative")
    _need(twin.m_max, m + shift)
    t = twin.flags_t
    return TwinPatternCount(shift, m, _and_count(t[1 : m + 1], t[1 + shift : m + shift + 1]))


def count_twin_goldbach(twin: TwinFlags, m: int) -> int:
    """Unordered index pairs ``i <= j``, ``i + j = m``, with both twin bits set.

    Each such pair represents all of ``6m - 2``, ``6m`` and ``6m + 2`` as a
    sum of two primes that belong to twin pairs.
    """
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    _need(twin.m_max, m - 1)
    t = twin.flags_t
    half = m // 2
    return _and_count(t[1 : half + 1], t[m - 1 : m - half - 1 : -1])


def twin_pair_sum_counts(twin: TwinFlags, limit: int) -> np.ndarray:
    """``out[m]`` = :func:`count_twin_goldbach` for every ``0 <= m <= limit``."""
    _need(twin.m_max, max(limit - 1, 0))
    members = np.flatnonzero(twin.flags_t[:limit])
    ordered = np.zeros(limit + 1, dtype=np.int64)
    for x in members.tolist():
        ys = members[members <= limit - x]
        ordered[x + ys] += 1
    # ordered pairs -> unordered, the diagonal i == j counted once
    diag = np.zeros(limit + 1, dtype=np.int64)
    dm = 2 * members
    diag[dm[dm <= limit]] = 1
    return (ordered + diag) // 2


@dataclass(frozen=True)
class ExceptionSearch:
    limit: int
    exceptions: list[int]
    certification_bound: int  # largest twin index consulted


def find_twin_goldbach_exceptions(twin: TwinFlags, limit: int) -> list[int]:
    """All ``m <= limit`` with no twin-pair representation, ascending."""
    return search_twin_goldbach_exceptions(twin, limit).exceptions


def search_twin_goldbach_exceptions(twin: TwinFlags, limit: int) -> ExceptionSearch:
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    counts = twin_pair_sum_counts(twin, limit)
    missing = (np.flatnonzero(counts[1:] == 0) + 1).tolist()
    return ExceptionSearch(limit, missing, max(limit - 1, 0))
