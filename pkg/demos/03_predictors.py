"""Mertens-type lower bounds, correction constants and count predictors.

Run: python demos/03_predictors.py
"""
from sievelab.analytic import (
    correction_constant,
    divergence_trend,
    eta2,
    mertens_lower_bound,
    mu,
    predict,
    twin_prime_constant,
)
from sievelab.counting import count_gap_pairs, count_twin_patterns
from sievelab.sieve import build_flags, twin_flags

flags = build_flags(10**6 // 6 + 60)
twin = twin_flags(flags)
pi2 = count_gap_pairs(flags, 2, 10**6).count
quads = count_twin_patterns(twin, 1, 166666).count

print(f"pi_2(10^6) = {pi2}, mH_m = {mertens_lower_bound(2, 166666):.3f}")
print(f"Pi_1(10^6) = {quads}, mQ_m = {mertens_lower_bound(4, 166666):.3f}")

# m normalizes the counts; the default takes the index of the last prime <= n
for rule in ("last_prime", "floor"):
    p = predict("twin", flags, 10**6, m_rule=rule)
    print(f"twin predictor [{rule:10s}] m={p.inputs['m']}: {p.predicted:.4f}, error {pi2 - p.predicted:.4f}")
for target in ("quad_from_primes", "quad_from_twins"):
    p = predict(target, flags, 10**6)
    print(f"{target:16s}: {p.predicted:.4f}, error {quads - p.predicted:.4f}")

for kind in ("C12", "C14", "C24"):
    print(kind, [round(correction_constant(kind, b).value, 8) for b in (10**3, 10**5, 10**6)])
print("C2 truncated at 10^7:", twin_prime_constant(10**7))

for g in (28, 30, 210):
    actual = count_gap_pairs(flags, g, 10**6).count / pi2
    print(f"eta2({g}) = {eta2(g):.4f}, observed pi_{g}/pi_2 = {actual:.4f}")

print("mu2 at 32, 10^5:", mu(2, 32), mu(2, 10**5))
print("mu4 at 227, 120000:", mu(4, 227), mu(4, 120000))
print("I_m at m = 2^10, 2^15, 2^20:", divergence_trend(4, [2**10, 2**15, 2**20]))
