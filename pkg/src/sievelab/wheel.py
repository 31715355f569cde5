"""Arithmetic of the residue classes 6i-1 and 6i+1.

Every prime above 3 is either ``a_i = 6i - 1`` (class A) or ``b_i = 6i + 1``
(class B).  Indices are 1-based.  For a prime ``p >= 5`` the indices ``i``
with ``p | a_i`` form a single residue class modulo ``p``, and likewise for
``b_i``; :func:`composite_progressions` returns both.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import CapacityError, DomainError

INT64_MAX = 2**63 - 1


class WheelClass(enum.Enum):
    A = "A"  # 6i - 1
    B = "B"  # 6i + 1

    @property
    def offset(self) -> int:
        return -1 if self is WheelClass.A else 1


class EvenKind(enum.Enum):
    G1 = 1  # 6m - 2
    G2 = 2  # 6m
    G3 = 3  # 6m + 2


@dataclass(frozen=True)
class EvenClass:
    klass: EvenKind
    m: int

    @property
    def value(self) -> int:
        return 6 * self.m + (self.klass.value - 2) * 2


class SignForm(enum.Enum):
    plus = "plus"
    minus = "minus"


@dataclass(frozen=True)
class ProgressionDescriptor:
    """Indices ``i = first_index + k * common_difference`` with ``p | term(target, i)``."""

    target: WheelClass
    first_index: int
    common_difference: int
    sign_form: SignForm

    def contains(self, i: int) -> bool:
        return (i - self.first_index) % self.common_difference == 0


def term(klass: WheelClass, i: int) -> int:
    """Return ``6i - 1`` for class A and ``6i + 1`` for class B."""
    if i < 1:
        raise DomainError(f"wheel index must be >= 1, got {i}")
    value = 6 * i + klass.offset
    if value > INT64_MAX:
        raise CapacityError(f"term 6*{i}{klass.offset:+d} exceeds 64-bit range")
    return value


def index_of(n: int) -> tuple[WheelClass, int]:
    """Inverse of :func:`term` for an integer coprime to 6."""
    r = n % 6
    if n < 5 or r not in (1, 5):
        raise DomainError(f"{n} is not of the form 6i-1 or 6i+1 with i >= 1")
    if r == 5:
        return WheelClass.A, (n + 1) // 6
    return WheelClass.B, (n - 1) // 6


def even_value(klass: EvenKind, m: int) -> int:
    return EvenClass(klass, m).value


def classify_even(g: int) -> EvenClass:
    """Map an even ``g >= 4`` to its class G1/G2/G3 and parameter ``m``."""
    if g < 4 or g % 2:
        raise DomainError(f"expected an even integer >= 4, got {g}")
    r = g % 6
    if r == 4:
        return EvenClass(EvenKind.G1, (g + 2) // 6)
    if r == 0:
        return EvenClass(EvenKind.G2, g // 6)
    return EvenClass(EvenKind.G3, (g - 2) // 6)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0 or n % 3 == 0:
        return n in (2, 3)
    for d in range(5, math.isqrt(n) + 1, 6):
        if n % d == 0 or n % (d + 2) == 0:
            return False
    return True


def residues(p: int) -> tuple[int, int]:
    """Residues ``(r_a, r_b)`` in ``[1, p]`` of the indices cleared by ``p``.

    Unchecked fast path used by the sieve; ``p`` must be a prime >= 5.
    """
    if p % 6 == 5:
        j = (p + 1) // 6
        return j, p - j
    k = (p - 1) // 6
    return p - k, k


def composite_progressions(p: int) -> list[ProgressionDescriptor]:
    """Index progressions of the terms of A and B divisible by the prime ``p``.

    For ``p = 6j - 1`` the A-terms divisible by ``p`` sit at ``i = j + lp`` and
    the B-terms at ``i = -j + lp``; for ``p = 6k + 1`` the signs swap.  The
    first index is reduced into ``[1, p]``, so it may point at ``p`` itself.
    """
    if p < 5 or not _is_prime(p):
        raise DomainError(f"expected a prime >= 5, got {p}")
    r_a, r_b = residues(p)
    if p % 6 == 5:
        forms = (SignForm.plus, SignForm.minus)
    else:
        forms = (SignForm.minus, SignForm.plus)
    return [
        ProgressionDescriptor(WheelClass.A, r_a, p, forms[0]),
        ProgressionDescriptor(WheelClass.B, r_b, p, forms[1]),
    ]
