"""Segmented wheel sieve producing the class-A / class-B prime bitmaps.

Bitmaps are numpy boolean arrays of length ``m_max + 1``; position ``i``
stands for index ``i`` (position 0 is unused and always False).  Composites
are cleared along the index progressions from :mod:`sievelab.wheel`, block by
block, never by testing individual numbers.
"""

from __future__ import annotations

import math
import os
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import CapacityError, DomainError
from .wheel import INT64_MAX, _is_prime, composite_progressions, residues

DEFAULT_BLOCK_SIZE = 2**15
MAGIC = b"SVL1"
HEADER = struct.Struct("<4sQ4x")  # 16 bytes


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class PrimeFlags:
    """Prime indicators for ``6i - 1`` (``flags_a``) and ``6i + 1`` (``flags_b``), ``1 <= i <= m_max``."""

    m_max: int
    flags_a: np.ndarray
    flags_b: np.ndarray

    def __post_init__(self):
        for arr in (self.flags_a, self.flags_b):
            if arr.shape != (self.m_max + 1,) or arr.dtype != np.bool_:
                raise ValueError("flags must be boolean arrays of length m_max + 1")
            if arr[0]:
                raise ValueError("position 0 is unused and must be False")
            _frozen(arr)

    def __eq__(self, other):
        if not isinstance(other, PrimeFlags):
            return NotImplemented
        return (
            self.m_max == other.m_max
            and np.array_equal(self.flags_a, other.flags_a)
            and np.array_equal(self.flags_b, other.flags_b)
        )

    @property
    def limit(self) -> int:
        """Largest integer whose primality is recorded (``6 m_max + 1``)."""
        return 6 * self.m_max + 1

    def primes(self, bound: int | None = None) -> np.ndarray:
        """Sorted primes ``5 <= p <= bound`` as int64."""
        bound = self.limit if bound is None else min(bound, self.limit)
        ia = np.flatnonzero(self.flags_a)
        ib = np.flatnonzero(self.flags_b)
        vals = np.concatenate((6 * ia - 1, 6 * ib + 1))
        vals.sort()
        return vals[vals <= bound]


@dataclass(frozen=True, eq=False)
class TwinFlags:
    """Indicator of indices ``i`` where both ``6i - 1`` and ``6i + 1`` are prime."""

    m_max: int
    flags_t: np.ndarray

    def __post_init__(self):
        if self.flags_t.shape != (self.m_max + 1,) or self.flags_t.dtype != np.bool_:
            raise ValueError("flags_t must be a boolean array of length m_max + 1")
        _frozen(self.flags_t)

    def __eq__(self, other):
        if not isinstance(other, TwinFlags):
            return NotImplemented
        return self.m_max == other.m_max and np.array_equal(self.flags_t, other.flags_t)


def _threads() -> int:
    try:
        n = int(os.environ.get("SIEVELAB_THREADS", "1"))
    except ValueError:
        n = 1
    if n == 0:
        return os.cpu_count() or 1
    return max(n, 1)


def _sieve_block(lo: int, hi: int, base: np.ndarray, out_a: np.ndarray, out_b: np.ndarray) -> None:
    # block covers indices lo..hi-1
    a = out_a[lo:hi]
    b = out_b[lo:hi]
    a[:] = True
    b[:] = True
    for p in base.tolist():
        r_a, r_b = residues(p)
        own_a = r_a if p % 6 == 5 else 0  # index at which the term is p itself
        own_b = r_b if p % 6 == 1 else 0
        for arr, r, own in ((a, r_a, own_a), (b, r_b, own_b)):
            start = lo + (r - lo) % p
            if start == own:
                start += p
            if start < hi:
                arr[start - lo :: p] = False


def build_flags(m_max: int, block_size: int = DEFAULT_BLOCK_SIZE, threads: int | None = None) -> PrimeFlags:
    """Sieve the classes 6i-1 and 6i+1 for ``1 <= i <= m_max``.

    Base primes up to ``sqrt(6 m_max + 1)`` come from a recursive call on a
    smaller index bound.  The result does not depend on ``block_size`` or
    ``threads``.
    """
    if m_max < 1:
        raise DomainError(f"m_max must be >= 1, got {m_max}")
    if block_size < 1:
        raise DomainError(f"block_size must be >= 1, got {block_size}")
    if m_max > (INT64_MAX - 1) // 6:
        raise CapacityError(f"6*{m_max}+1 does not fit in a signed 64-bit integer")

    root = math.isqrt(6 * m_max + 1)
    if root >= 5:
        base = build_flags((root + 1) // 6, block_size).primes(root)
    else:
        base = np.empty(0, dtype=np.int64)

    fa = np.empty(m_max + 1, dtype=bool)
    fb = np.empty(m_max + 1, dtype=bool)
    blocks = [(lo, min(lo + block_size, m_max + 1)) for lo in range(1, m_max + 1, block_size)]
    workers = _threads() if threads is None else max(threads, 1)
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(workers) as pool:
            list(pool.map(lambda blk: _sieve_block(*blk, base, fa, fb), blocks))
    else:
        for lo, hi in blocks:
            _sieve_block(lo, hi, base, fa, fb)
    fa[0] = fb[0] = False
    return PrimeFlags(m_max, fa, fb)


def twin_flags(flags: PrimeFlags) -> TwinFlags:
    return TwinFlags(flags.m_max, flags.flags_a & flags.flags_b)


def _check_prime_in_range(p: int, m_max: int) -> None:
    if p < 5 or not _is_prime(p):
        raise DomainError(f"expected a prime >= 5, got {p}")
    if p > 6 * m_max - 1:
        raise DomainError(f"p={p} exceeds the sieve range 6*{m_max}-1")


def verify_well_structured(flags: PrimeFlags, p: int) -> bool:
    """Check that in each class the indices of multiples of ``p`` are exactly one progression mod ``p``.

    Also checks that every such index other than the one carrying ``p``
    itself is cleared in the bitmap.
    """
    _check_prime_in_range(p, flags.m_max)
    idx = np.arange(1, flags.m_max + 1, dtype=np.int64)
    for desc, bits, off in (
        (composite_progressions(p)[0], flags.flags_a, -1),
        (composite_progressions(p)[1], flags.flags_b, 1),
    ):
        divisible = (6 * idx + off) % p == 0
        predicted = (idx - desc.first_index) % p == 0
        if not np.array_equal(divisible, predicted):
            return False
        hits = idx[divisible]
        hits = hits[6 * hits + off != p]
        if bits[hits].any():
            return False
    return True


def verify_double_sieve(twin: TwinFlags, p: int) -> bool:
    """Check that ``p`` clears exactly two distinct residue classes of twin indices."""
    _check_prime_in_range(p, twin.m_max)
    idx = np.arange(1, twin.m_max + 1, dtype=np.int64)
    hit = ((6 * idx - 1) % p == 0) | ((6 * idx + 1) % p == 0)
    r_a, r_b = (d.first_index % p for d in composite_progressions(p))
    if r_a == r_b:
        return False
    predicted = np.isin(idx % p, (r_a, r_b))
    if not np.array_equal(hit, predicted):
        return False
    own_index = (p + 1) // 6 if p % 6 == 5 else (p - 1) // 6
    cleared = idx[hit & (idx != own_index)]
    return not twin.flags_t[cleared].any()


def save_flags(flags: PrimeFlags, path: str | os.PathLike) -> None:
    """Write ``flags`` as: 16-byte header (``SVL1``, u64 m_max, 4 pad bytes), then A and B bits packed LSB-first.

    Bit ``k`` of each bitmap stores index ``k + 1``.
    """
    with open(path, "wb") as fh:
        fh.write(HEADER.pack(MAGIC, flags.m_max))
        fh.write(np.packbits(flags.flags_a[1:], bitorder="little").tobytes())
        fh.write(np.packbits(flags.flags_b[1:], bitorder="little").tobytes())


def load_flags(path: str | os.PathLike) -> PrimeFlags:
    data = Path(path).read_bytes()
    if len(data) < HEADER.size:
        raise ValueError("truncated sieve file")
    magic, m_max = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ValueError(f"bad magic {magic!r}")
    nbytes = (m_max + 7) // 8
    if len(data) != HEADER.size + 2 * nbytes:
        raise ValueError("sieve file size does not match header")
    body = np.frombuffer(data, dtype=np.uint8, offset=HEADER.size)
    out = []
    for chunk in (body[:nbytes], body[nbytes:]):
        bits = np.unpackbits(chunk, count=m_max, bitorder="little").astype(bool)
        out.append(np.concatenate(([False], bits)))
    return PrimeFlags(int(m_max), out[0], out[1])
