"""Finite index segments with zero-annihilating arithmetic.

A segment is the window of an indicator sequence written out in index form:
cell ``j`` holds the index it was drawn from when that index is prime (or a
twin), and 0 otherwise.  Counting code works on the bitmaps directly; the
segments here exist to state the constructions literally and to check the
bitmap shortcuts against them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError, ShapeError
from .sieve import PrimeFlags, TwinFlags
from .wheel import WheelClass, residues, term


class Source(enum.Enum):
    L = "L"  # primes 6i-1
    R = "R"  # primes 6i+1
    T = "T"  # twin pairs


class Direction(enum.Enum):
    direct = "direct"
    inverse = "inverse"


class Op(enum.Enum):
    add = "add"
    sub = "sub"


@dataclass(frozen=True)
class SegmentSpec:
    source: Source
    length: int
    shift: int = 0
    direction: Direction = Direction.direct

    def __post_init__(self):
        if self.length < 1:
            raise DomainError("segment length must be >= 1")
        if self.shift < 0:
            raise DomainError("shift must be >= 0")
        if self.shift and self.direction is Direction.inverse:
            raise DomainError("inverse segments are never shifted")

    def index_at(self, j: int) -> int:
        """Sequence index read into cell ``j`` (1-based)."""
        if self.direction is Direction.inverse:
            return self.length - j + 1
        return j + self.shift


@dataclass(frozen=True, eq=False)
class Segment:
    cells: np.ndarray

    def __post_init__(self):
        cells = np.asarray(self.cells, dtype=np.int64)
        cells.flags.writeable = False
        object.__setattr__(self, "cells", cells)

    @property
    def length(self) -> int:
        return len(self.cells)

    def __eq__(self, other):
        if not isinstance(other, Segment):
            return NotImplemented
        return np.array_equal(self.cells, other.cells)

    def __len__(self):
        return len(self.cells)

    def tolist(self) -> list[int]:
        return self.cells.tolist()


def _source_bits(flags: PrimeFlags | TwinFlags, source: Source) -> np.ndarray:
    if isinstance(flags, TwinFlags):
        if source is not Source.T:
            raise DomainError(f"twin flags only provide source T, not {source.value}")
        return flags.flags_t
    if source is Source.L:
        return flags.flags_a
    if source is Source.R:
        return flags.flags_b
    return flags.flags_a & flags.flags_b


def take(flags: PrimeFlags | TwinFlags, spec: SegmentSpec) -> Segment:
    """Materialize the segment described by ``spec``."""
    if spec.shift + spec.length > flags.m_max:
        raise RangeError(
            f"segment reaches index {spec.shift + spec.length}, sieve covers {flags.m_max}"
        )
    bits = _source_bits(flags, spec.source)
    idx = np.arange(1 + spec.shift, spec.length + spec.shift + 1, dtype=np.int64)
    if spec.direction is Direction.inverse:
        idx = idx[::-1]
    return Segment(np.where(bits[idx], idx, 0))


def combine(s1: Segment, s2: Segment, op: Op | str) -> Segment:
    """Cell-wise sum or difference; a zero in either parent gives zero."""
    op = Op(op)
    if s1.length != s2.length:
        raise ShapeError(f"cannot combine segments of length {s1.length} and {s2.length}")
    live = (s1.cells != 0) & (s2.cells != 0)
    vals = s1.cells + s2.cells if op is Op.add else s1.cells - s2.cells
    out = np.where(live, vals, 0)
    if (out < 0).any():
        raise DomainError("subtraction produced a negative cell")
    return Segment(out)


def count_nonzero(s: Segment) -> int:
    return int(np.count_nonzero(s.cells))


def constant_value(s: Segment) -> int | None:
    """The common value of all nonzero cells, or None if they differ (or there are none)."""
    nz = s.cells[s.cells != 0]
    if nz.size == 0 or (nz != nz[0]).any():
        return None
    return int(nz[0])


def format_segment(s: Segment, klass: WheelClass | None = None) -> str:
    """Comma-separated cells with explicit zeros.

    With ``klass`` given, nonzero index cells are printed as the terms
    ``6i -+ 1`` of that class instead.
    """
    cells = s.tolist()
    if klass is not None:
        cells = [term(klass, c) if c else 0 for c in cells]
    return ", ".join(str(c) for c in cells)


@dataclass(frozen=True)
class SiftPattern:
    """How a prime ``p`` zeroes cells of a two-parent combination.

    ``residues`` are the cell positions (mod ``p``) zeroed by ``p``; one
    residue when both parents lose the same cells (``degenerate``), two
    otherwise.
    """

    p: int
    parent_residues: tuple[int, int]
    residues: tuple[int, ...]
    degenerate: bool


def _cell_residue(spec: SegmentSpec, p: int) -> int:
    source_class = {Source.L: 0, Source.R: 1}.get(spec.source)
    if source_class is None:
        raise DomainError("sift patterns are defined for L and R parents only")
    r = residues(p)[source_class]
    if spec.direction is Direction.inverse:
        # cell j reads index length - j + 1
        return (spec.length + 1 - r) % p
    return (r - spec.shift) % p


def sift_pattern(spec1: SegmentSpec, spec2: SegmentSpec, p: int) -> SiftPattern:
    """Residues of cells cleared by ``p`` in ``take(spec1) (+/-) take(spec2)``.

    Each parent loses one residue class of cells to ``p``.  When the two
    classes coincide the combination is sifted once by ``p``; otherwise twice.
    """
    if spec1.length != spec2.length:
        raise ShapeError("parents must have the same length")
    r1, r2 = _cell_residue(spec1, p), _cell_residue(spec2, p)
    res = (r1,) if r1 == r2 else tuple(sorted((r1, r2)))
    return SiftPattern(p, (r1, r2), res, r1 == r2)
