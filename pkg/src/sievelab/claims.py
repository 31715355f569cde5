"""Table of reproducible numeric claims and the harness that checks them."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import analytic, counting, density
from .errors import CapacityError
from .sieve import INT64_MAX, PrimeFlags, TwinFlags, build_flags, twin_flags, verify_double_sieve, verify_well_structured

TWIN_GOLDBACH_EXCEPTIONS = [1, 16, 67, 86, 131, 151, 186, 191, 211, 226, 541, 701]


@dataclass
class ClaimReport:
    """Outcome of one claim.

    ``relation`` is ``eq`` (``|computed - expected| <= tolerance``), ``gt``
    (``computed > expected``) or ``report`` (value recorded, always passes).
    """

    claim_id: str
    paper_location: str
    computed: float | int | None
    expected: float | int | None
    tolerance: float
    passed: bool
    relation: str = "eq"
    status: str = "pass"
    note: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Claim:
    claim_id: str
    paper_location: str
    bound: int  # largest integer the claim's sieve must cover
    expected: float | int | None
    tolerance: float
    compute: Callable[["Context"], tuple]
    relation: str = "eq"


class Context:
    def __init__(self, flags: PrimeFlags, twin: TwinFlags):
        self.flags = flags
        self.twin = twin


def _judge(claim: Claim, computed, note: str = "") -> ClaimReport:
    if claim.relation == "report":
        ok = computed is not None
    elif claim.relation == "gt":
        ok = computed > claim.expected
    else:
        ok = abs(computed - claim.expected) <= claim.tolerance
    return ClaimReport(
        claim.claim_id, claim.paper_location, computed, claim.expected, claim.tolerance,
        bool(ok), claim.relation, "pass" if ok else "fail", note,
    )


# ------------------------------------------------------------- brute force


def _primes_upto(n: int) -> np.ndarray:
    """Plain Eratosthenes over all integers, independent of the wheel sieve."""
    s = np.ones(n + 1, dtype=bool)
    s[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if s[p]:
            s[p * p :: p] = False
    return s


def _oracle_gap_pairs(ctx: Context) -> tuple:
    rng = np.random.default_rng(20240601)
    prime = _primes_upto(10**4 + 200)
    bad = 0
    for _ in range(500):
        g = 2 * int(rng.integers(1, 101))
        n = int(rng.integers(5, 10**4 + 1))
        p = np.arange(5, n + 1)
        want = int(np.count_nonzero(prime[p] & prime[p + g]))
        bad += counting.count_gap_pairs(ctx.flags, g, n).count != want
    return bad, "500 seeded (g, n) samples"


def _oracle_goldbach(ctx: Context) -> tuple:
    rng = np.random.default_rng(20240602)
    prime = _primes_upto(10**4)
    prime[:5] = False
    bad = 0
    for _ in range(500):
        g = 2 * int(rng.integers(5, 5001))
        p = np.arange(5, g // 2 + 1)
        want = int(np.count_nonzero(prime[p] & prime[g - p]))
        bad += counting.count_goldbach(ctx.flags, g).count != want
    return bad, "500 seeded even g in [10, 10^4]"


# ----------------------------------------------------------------- claims


def _twin_lower_bound_all(ctx: Context) -> tuple:
    ms = np.arange(6, 10**5 + 1)
    pi2 = np.cumsum(ctx.twin.flags_t)[ms]
    bad = ms[pi2 <= analytic.mertens_lower_bounds(2, ms)]
    return int(bad.size), f"violations at m={bad[:10].tolist()}" if bad.size else "5 < m <= 10^5"


def _quad_lower_bound_all(ctx: Context) -> tuple:
    ms = np.arange(2, 10**4 + 1)
    t = ctx.twin.flags_t
    quads = np.concatenate(([0], np.cumsum(t[1 : 10**4 + 1] & t[2 : 10**4 + 2])))
    bad = ms[quads[ms] <= analytic.mertens_lower_bounds(4, ms)]
    return int(bad.size), f"violations at m={bad[:10].tolist()}" if bad.size else "1 < m <= 10^4"


def _grid_argmin(k: int) -> tuple:
    ns = range(6, 1001)
    vals = [analytic.mu(k, n) for n in ns]
    best = int(np.argmin(vals))
    return 6 + best, f"min {vals[best]:.6f} over n in [6, 1000]"


def _exceptions(ctx: Context) -> tuple:
    found = counting.find_twin_goldbach_exceptions(ctx.twin, 30000)
    diff = sorted(set(found) ^ set(TWIN_GOLDBACH_EXCEPTIONS))
    return len(diff), f"found {found}"


def _above_4208(ctx: Context) -> tuple:
    top = 6 * 30000 + 2
    t = ctx.twin.flags_t[: top // 6 + 2]
    idx = np.flatnonzero(t)
    vals = np.zeros(top + 2, dtype=bool)
    vals[6 * idx - 1] = True
    vals[6 * idx + 1] = True
    sums = density._sumset(vals, vals, top)
    evens = np.arange(4210, top + 1, 2)
    bad = evens[~sums[evens]]
    return int(bad.size), f"even numbers in (4208, {top}] without a twin-member sum: {bad[:10].tolist()}"


def _qprime(ms, scaled: bool) -> tuple:
    vals = analytic.qprime_values(ms, scaled=scaled)
    bad = np.asarray(ms)[vals <= 1]
    return int(bad.size), f"min value {vals.min():.6g}; first violations {bad[:5].tolist()}"


def _structure(ctx: Context) -> tuple:
    primes = [int(p) for p in ctx.flags.primes(997)]
    small = PrimeFlags(10**4, ctx.flags.flags_a[: 10**4 + 1].copy(), ctx.flags.flags_b[: 10**4 + 1].copy())
    small_twin = twin_flags(small)
    bad = [p for p in primes if not (verify_well_structured(small, p) and verify_double_sieve(small_twin, p))]
    return len(bad), f"{len(primes)} primes 5..997 checked; failures {bad}"


def _order2(a: str, b: str) -> Callable:
    def run(ctx: Context) -> tuple:
        s1 = density.index_set(a, 10**4, ctx.flags)
        s2 = density.index_set(b, 10**4, ctx.flags)
        rep = density.sumset_coverage(s1, s2, 10**4)
        return len(rep.missing), f"missing {rep.missing[:20]}"

    return run


def _order3(kind: str) -> Callable:
    def run(ctx: Context) -> tuple:
        rep = density.basis_order3_check(kind, 10**4)
        return len(rep.missing), f"missing {rep.missing}"

    return run


def _divergence(ctx: Context) -> tuple:
    vals = analytic.divergence_trend(4, [2**j for j in range(10, 25)])
    drops = sum(b <= a for a, b in zip(vals, vals[1:]))
    return drops, f"I_m at m=2^10..2^24: {vals[0]:.4g} .. {vals[-1]:.4g}"


M6 = 166666  # 6m <= 10^6

CLAIMS: list[Claim] = [
    Claim("gap28_127", "gap-28 worked example", 155, 9, 0,
          lambda ctx: (counting.count_gap_pairs(ctx.flags, 28, 127).count, "")),
    Claim("goldbach_94", "Goldbach 94 worked example", 94, 5, 0,
          lambda ctx: (counting.count_goldbach(ctx.flags, 94).count, "")),
    Claim("goldbach_94_raw_half", "Goldbach 94 worked example", 94, 4.5, 0,
          lambda ctx: (counting.count_goldbach(ctx.flags, 94).raw_half, "")),
    Claim("twin_count_1e6", "twin primes", 10**6 + 2, 8168, 0,
          lambda ctx: (counting.count_gap_pairs(ctx.flags, 2, 10**6).count, "pair (3, 5) excluded")),
    Claim("twin_mertens_margin_1e6", "twin primes", 10**6 + 2, 1251, 0,
          lambda ctx: (counting.count_gap_pairs(ctx.flags, 2, 10**6).count
                       - analytic.mertens_lower_bound(2, M6), "m = 166666"), relation="gt"),
    Claim("twin_lower_bound_all_m", "twin primes", 6 * 10**5 + 2, 0, 0, _twin_lower_bound_all),
    Claim("hl_twin_error_1e6", "twin predictor error", 10**6 + 2, 32.5356, 0.05,
          lambda ctx: (8168 - analytic.predict("twin", ctx.flags, 10**6).predicted,
                       "m = 166664 (index of 999983, the largest prime <= 10^6)")),
    Claim("quad_mertens_margin_1e6", "prime quadruplets", 10**6 + 8, 52.07, 1,
          lambda ctx: (counting.count_twin_patterns(ctx.twin, 1, M6).count
                       - analytic.mertens_lower_bound(4, M6), "m = 166666")),
    Claim("quad_from_primes_error_1e6", "quadruplet predictor from primes", 10**6 + 8, 8.3904, 1,
          lambda ctx: (counting.count_twin_patterns(ctx.twin, 1, M6).count
                       - analytic.predict("quad_from_primes", ctx.flags, 10**6).predicted, "m = 166664")),
    Claim("quad_from_twins_error_1e6", "quadruplet predictor from twins", 10**6 + 8, 7.1272, 1,
          lambda ctx: (counting.count_twin_patterns(ctx.twin, 1, M6).count
                       - analytic.predict("quad_from_twins", ctx.flags, 10**6).predicted, "m = 166664")),
    Claim("quad_lower_bound_all_m", "prime quadruplets", 6 * 10**4 + 14, 0, 0, _quad_lower_bound_all),
    Claim("mu2_32", "mu_2 ratio", 0, 0.706, 0.01, lambda ctx: (analytic.mu(2, 32), "")),
    Claim("mu2_grid_argmin", "mu_2 ratio", 0, 32, 0, lambda ctx: _grid_argmin(2)),
    Claim("mu2_1e5", "mu_2 ratio", 0, 0.972, 0.005, lambda ctx: (analytic.mu(2, 10**5), "")),
    Claim("mu4_227", "mu_4 ratio", 0, 0.136278, 0.002, lambda ctx: (analytic.mu(4, 227), "")),
    Claim("mu4_grid_argmin", "mu_4 ratio", 0, 227, 0, lambda ctx: _grid_argmin(4)),
    Claim("mu4_120000", "mu_4 ratio", 0, 0.57533, 0.005, lambda ctx: (analytic.mu(4, 120000), "")),
    Claim("twin_goldbach_exceptions_30000", "twin-pair sums, exception list", 6 * 30000 + 2, 0, 0, _exceptions),
    Claim("twin_goldbach_above_4208", "twin-pair sums", 6 * 30000 + 8, 0, 0, _above_4208),
    Claim("qprime_947", "Q'_m > 1 for 947 <= m <= 10^4", 0, 0, 0,
          lambda ctx: _qprime(range(947, 10**4 + 1), scaled=False)),
    Claim("mqprime_947", "m Q'_m > 1 for 947 <= m <= 10^4", 0, 0, 0,
          lambda ctx: _qprime(range(947, 10**4 + 1), scaled=True)),
    Claim("oracle_gap_pairs", "gap-pair constructions", 10**4 + 220, 0, 0, _oracle_gap_pairs),
    Claim("oracle_goldbach", "Goldbach constructions", 10**4 + 8, 0, 0, _oracle_goldbach),
    Claim("sieve_structure", "sieve structure", 6 * 10**4 + 2, 0, 0, _structure),
    Claim("density_LL", "sumset density", 6 * 10**4 + 2, 0, 0, _order2("L", "L")),
    Claim("density_LR", "sumset density", 6 * 10**4 + 2, 0, 0, _order2("L", "R")),
    Claim("density_RR", "sumset density", 6 * 10**4 + 2, 0, 0, _order2("R", "R")),
    Claim("order3_primes_with_1", "sumset density", 10**4, 0, 0, _order3("PrimesWith1")),
    Claim("order3_twin_primes", "sumset density", 10**4, None, 0, _order3("TwinPrimes"), relation="report"),
    Claim("twin_prime_constant_1e7", "C2 = (3/4) C12", 10**7, 0.660162, 1e-5,
          lambda ctx: (analytic.twin_prime_constant(10**7), "product bound 10^7")),
    Claim("divergence_trend", "divergence of I_m", 6 * 2**24, 0, 0, _divergence),
]

CLAIM_IDS = [c.claim_id for c in CLAIMS]


def _threads() -> int:
    try:
        n = int(os.environ.get("SIEVELAB_THREADS", "1"))
    except ValueError:
        return 1
    return (os.cpu_count() or 1) if n == 0 else max(n, 1)


def run_paper_checks(limit_n: int = 10**7, selection: list[str] | None = None) -> list[ClaimReport]:
    """Run every selected claim whose bound fits under ``limit_n``.

    Claims beyond the limit come back with status ``skipped``.  Reports are
    sorted by claim id.
    """
    if limit_n < 1 or limit_n // 6 + 2 > (INT64_MAX - 1) // 6:
        raise CapacityError(f"limit {limit_n} cannot be sieved")
    chosen = CLAIMS
    if selection is not None:
        unknown = sorted(set(selection) - set(CLAIM_IDS))
        if unknown:
            raise KeyError(f"unknown claim ids: {', '.join(unknown)}")
        chosen = [c for c in CLAIMS if c.claim_id in set(selection)]

    runnable = [c for c in chosen if c.bound <= limit_n]
    reports = [
        ClaimReport(c.claim_id, c.paper_location, None, c.expected, c.tolerance, False,
                    c.relation, "skipped", f"bound {c.bound} exceeds limit {limit_n}")
        for c in chosen if c.bound > limit_n
    ]
    # the shared sieve serves index-based claims; wider products sieve on their own
    need = max([c.bound for c in runnable if c.bound <= 10**6 + 220] + [6 * 10**4 + 14])
    flags = build_flags(need // 6 + 2)
    ctx = Context(flags, twin_flags(flags))

    def run(claim: Claim) -> ClaimReport:
        computed, note = claim.compute(ctx)
        if isinstance(computed, (np.integer, np.floating)):
            computed = computed.item()
        return _judge(claim, computed, note)

    workers = _threads()
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            reports += list(pool.map(run, runnable))
    else:
        reports += [run(c) for c in runnable]
    return sorted(reports, key=lambda r: r.claim_id)
