"""Sifting products, correction constants, density quotients and predictors.

Products over primes are taken over ``5 <= p <= bound`` and accumulated in
the log domain with :func:`math.fsum`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from .counting import count_gap_pairs, count_primes, count_twin_patterns
from .errors import DomainError, RangeError, UndefinedRatioError
from .sieve import PrimeFlags, TwinFlags, build_flags, twin_flags
from .wheel import WheelClass

EULER_GAMMA = 0.5772156649015329

_primes_cache: np.ndarray = np.empty(0, dtype=np.int64)
_primes_cache_limit = 0


def wheel_primes(bound: int) -> np.ndarray:
    """Primes ``5 <= p <= bound``, ascending (cached)."""
    global _primes_cache, _primes_cache_limit
    if bound > _primes_cache_limit:
        m_max = max((bound + 1) // 6 + 1, 2 * (_primes_cache_limit // 6), 16)
        flags = build_flags(m_max)
        _primes_cache = flags.primes()
        _primes_cache.flags.writeable = False
        _primes_cache_limit = flags.limit
    return _primes_cache[: np.searchsorted(_primes_cache, bound, side="right")]


# ---------------------------------------------------------------- products


@dataclass(frozen=True)
class SiftingProduct:
    alpha: int
    bound: int
    value: float


def _log_factors(alpha: int, primes: np.ndarray) -> np.ndarray:
    return np.log1p(-alpha / primes.astype(np.float64))


def sifting_product(alpha: int, bound: int) -> SiftingProduct:
    """``prod (1 - alpha/p)`` over primes ``5 <= p <= bound``."""
    if alpha not in (1, 2, 4):
        raise DomainError(f"alpha must be 1, 2 or 4, got {alpha}")
    if bound < 5:
        raise DomainError(f"bound must be >= 5, got {bound}")
    logs = _log_factors(alpha, wheel_primes(bound))
    return SiftingProduct(alpha, bound, math.exp(math.fsum(logs.tolist())))


def sifting_products(alpha: int, bounds: Iterable[int]) -> np.ndarray:
    """Vectorized :func:`sifting_product` values for many bounds."""
    bounds = np.asarray(list(bounds), dtype=np.int64)
    primes = wheel_primes(int(bounds.max()))
    cum = np.concatenate(([0.0], np.cumsum(_log_factors(alpha, primes))))
    return np.exp(cum[np.searchsorted(primes, bounds, side="right")])


class ConstantKind(enum.Enum):
    C12 = "C12"
    C14 = "C14"
    C24 = "C24"


@dataclass(frozen=True)
class CorrectionConstant:
    kind: ConstantKind
    bound: int
    value: float


def _constant_log_factors(kind: ConstantKind, p: np.ndarray) -> np.ndarray:
    p = p.astype(np.float64)
    # each factor written as 1 - (small) to keep the logs accurate for large p
    if kind is ConstantKind.C12:  # p(p-2)/(p-1)^2
        return np.log1p(-1.0 / (p - 1.0) ** 2)
    if kind is ConstantKind.C14:  # (p-4)p^3/(p-1)^4
        return np.log1p(-(6.0 * p * p - 4.0 * p + 1.0) / (p - 1.0) ** 4)
    return np.log1p(-4.0 / (p - 2.0) ** 2)  # (p-4)p/(p-2)^2


def correction_constant(kind: ConstantKind | str, bound: int) -> CorrectionConstant:
    kind = ConstantKind(kind)
    if bound < 5:
        raise DomainError(f"bound must be >= 5, got {bound}")
    logs = _constant_log_factors(kind, wheel_primes(bound))
    return CorrectionConstant(kind, bound, math.exp(math.fsum(logs.tolist())))


def twin_prime_constant(bound: int) -> float:
    """The twin prime constant truncated at ``bound``, as ``(3/4) C12``."""
    return 0.75 * correction_constant(ConstantKind.C12, bound).value


def mertens_lower_bound(k: int, m: int) -> float:
    """``m e^{k gamma} prod (1 - k/p)`` over ``5 <= p <= 6m`` (``k`` = 2 or 4)."""
    if k not in (2, 4):
        raise DomainError(f"k must be 2 or 4, got {k}")
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return m * math.exp(k * EULER_GAMMA) * sifting_product(k, 6 * m).value


def mertens_lower_bounds(k: int, ms: Sequence[int]) -> np.ndarray:
    ms = np.asarray(ms, dtype=np.int64)
    return ms * math.exp(k * EULER_GAMMA) * sifting_products(k, 6 * ms)


def divergence_trend(k: int, m_values: Sequence[int]) -> list[float]:
    """``I_m = m prod (1 - 4/p)`` over ``5 <= p <= 6m`` for each ``m``."""
    if k != 4:
        raise DomainError("the divergence trend is defined for k = 4")
    ms = list(m_values)
    if any(b <= a for a, b in zip(ms, ms[1:])) or any(m < 2 for m in ms):
        raise DomainError("m_values must be ascending and >= 2")
    return (np.asarray(ms, dtype=np.float64) * sifting_products(4, [6 * m for m in ms])).tolist()


# ----------------------------------------------------------------- ratios


def prime_divisors(g: int) -> list[int]:
    out = []
    d = 2
    while d * d <= g:
        if g % d == 0:
            out.append(d)
            while g % d == 0:
                g //= d
        d += 1
    if g > 1:
        out.append(g)
    return out


def eta2(g: int, mode: str = "difference") -> float:
    """``kappa * prod (d-1)/(d-2)`` over distinct primes ``d >= 5`` dividing ``g``.

    ``kappa`` is 2 (difference) or 1 (sum) when 3 divides ``g``, else 1
    (difference) or 0.5 (sum).
    """
    if g < 2 or g % 2:
        raise DomainError(f"expected an even integer >= 2, got {g}")
    if mode not in ("difference", "sum"):
        raise DomainError(f"mode must be 'difference' or 'sum', got {mode!r}")
    three = g % 3 == 0
    if mode == "difference":
        kappa = 2.0 if three else 1.0
    else:
        kappa = 1.0 if three else 0.5
    out = kappa
    for d in prime_divisors(g):
        if d >= 5:
            out *= (d - 1) / (d - 2)
    return out


def eta4_empirical(twin: TwinFlags, shift: int, m: int) -> float:
    den = count_twin_patterns(twin, 1, m).count
    if den == 0:
        raise UndefinedRatioError(f"no quadruplets with index <= {m}")
    return count_twin_patterns(twin, shift, m).count / den


def mu(k: int, n: int) -> float:
    """Mixed-log density quotient over integer ``t = 2 .. n-2``.

    ``k = 2``: ``sum 1/(log t log(n-t)) / sum 1/(log t)^2``;
    ``k = 4``: the same with both logs squared over ``sum 1/(log t)^4``.
    """
    if k not in (2, 4):
        raise DomainError(f"k must be 2 or 4, got {k}")
    if n < 6:
        raise DomainError(f"n must be >= 6, got {n}")
    t = np.arange(2, n - 1, dtype=np.float64)
    lt = np.log(t)
    lr = np.log(n - t)
    if k == 2:
        return float(np.sum(1.0 / (lt * lr)) / np.sum(1.0 / lt**2))
    return float(np.sum(1.0 / (lt * lr) ** 2) / np.sum(1.0 / lt**4))


# ------------------------------------------------------------- predictors


class Target(enum.Enum):
    twin = "twin"
    gap = "gap"
    goldbach = "goldbach"
    quad_from_primes = "quad_from_primes"
    quad_from_twins = "quad_from_twins"
    twin_goldbach = "twin_goldbach"


@dataclass(frozen=True)
class Predictor:
    target: Target
    n: int
    predicted: float
    inputs: dict[str, Any] = field(default_factory=dict)


def effective_m(flags: PrimeFlags, n: int, rule: str = "last_prime") -> int:
    """Normalizing index ``m`` for a bound ``n``.

    ``floor``: ``n // 6``.  ``last_prime``: the wheel index of the largest
    prime ``<= n`` (166664 for ``n = 10**6``, since 999983 = 6*166664 - 1).
    """
    if rule == "floor":
        return n // 6
    if rule != "last_prime":
        raise DomainError(f"unknown m rule {rule!r}")
    if n < 5:
        raise DomainError("no wheel prime below 5")
    if (n + 1) // 6 > flags.m_max:
        raise RangeError(f"n={n} beyond sieve range")
    ps = flags.primes(n)
    return int((ps[-1] + 1) // 6)


def _counts(flags: PrimeFlags, n: int) -> tuple[int, int, int]:
    if (n + 1) // 6 > flags.m_max:
        raise RangeError(f"n={n} beyond sieve range {flags.limit}")
    return (
        count_primes(flags, WheelClass.A, n),
        count_primes(flags, WheelClass.B, n),
        count_gap_pairs(flags, 2, n).count,
    )


def predict(
    target: Target | str,
    flags: PrimeFlags,
    n: int | None = None,
    *,
    m: int | None = None,
    g: int | None = None,
    source: str = "count",
    eta4: float = 1.0,
    m_rule: str = "last_prime",
) -> Predictor:
    """Evaluate one of the count predictors from sieve data.

    Prime counts are measured up to ``n``; ``m`` normalizes them (see
    :func:`effective_m`) and ``6m`` bounds every constant's product.  For
    ``twin_goldbach`` pass ``m`` (the triple index) directly.
    """
    target = Target(target)

    if target is Target.goldbach:
        if g is None:
            raise DomainError("goldbach prediction needs g")
        pi2 = count_gap_pairs(flags, 2, g).count
        mu2 = mu(2, g)
        e2 = eta2(g, "sum")
        return Predictor(target, g, pi2 * mu2 * e2, {"g": g, "pi2": pi2, "mu2": mu2, "eta2": e2})

    if m is None:
        if n is None:
            raise DomainError("either n or m is required")
        m = effective_m(flags, n, m_rule)
    else:
        m_rule = "explicit"
        n = 6 * m if n is None else n
    if m < 1:
        raise DomainError("m must be >= 1")
    pa, pb, pi2 = _counts(flags, n)
    bound = 6 * m
    inputs: dict[str, Any] = {
        "n": n, "m": m, "m_rule": m_rule, "product_bound": bound,
        "pi_a": pa, "pi_b": pb, "pi2": pi2,
        "phi_a": pa / m, "phi_b": pb / m,
    }

    if target in (Target.twin, Target.gap):
        c12 = correction_constant(ConstantKind.C12, bound).value
        twin_pred = c12 * pa * pb / m
        inputs["C12"] = c12
        if target is Target.twin:
            return Predictor(target, n, twin_pred, inputs)
        if g is None:
            raise DomainError("gap prediction needs g")
        e2 = eta2(g, "difference")
        base = pi2 if source == "count" else twin_pred
        inputs.update(g=g, eta2=e2, source=source, twin_predicted=twin_pred)
        return Predictor(target, n, e2 * base, inputs)

    if target is Target.quad_from_primes:
        c14 = correction_constant(ConstantKind.C14, bound).value
        inputs["C14"] = c14
        return Predictor(target, n, c14 * m * ((pa / m) * (pb / m)) ** 2, inputs)

    if target is Target.quad_from_twins:
        c24 = correction_constant(ConstantKind.C24, bound).value
        inputs["C24"] = c24
        return Predictor(target, n, c24 * m * (pi2 / m) ** 2, inputs)

    # twin_goldbach: pi(6m) read as pi_a + pi_b; the split reading is kept in inputs
    c14 = correction_constant(ConstantKind.C14, bound).value
    mu4 = mu(4, 6 * m)
    scale = eta4 * mu4 * c14 * m
    inputs.update(C14=c14, mu4=mu4, eta4=eta4, predicted_split=scale * ((pa / m) * (pb / m)) ** 2)
    return Predictor(target, n, scale * ((pa + pb) / m) ** 4, inputs)


def qprime_values(ms: Sequence[int], scaled: bool = False) -> np.ndarray:
    """``mu4(6m) e^{4 gamma} prod (1 - 4/p)``, times ``m`` when ``scaled``."""
    ms = np.asarray(ms, dtype=np.int64)
    q = mertens_lower_bounds(4, ms) / ms
    mu4 = np.array([mu(4, 6 * int(m)) for m in ms])
    out = mu4 * q
    return out * ms if scaled else out


def flags_for(n: int) -> tuple[PrimeFlags, TwinFlags]:
    """Sieve covering every value up to ``n`` plus one spare index."""
    flags = build_flags(n // 6 + 2)
    return flags, twin_flags(flags)
