"""Finite-range densities and sumset coverage.

Run: python demos/04_density.py
"""
from sievelab.density import basis_order3_check, density, index_set, sumset_coverage
from sievelab.sieve import build_flags

limit = 10**4
flags = build_flags(limit)
sets = {name: index_set(name, limit, flags) for name in "LRT"}

for name, s in sets.items():
    for n in (10**2, 10**3, 10**4):
        _, natural = density(index_set(name, n, flags))
        print(f"{name}: natural density estimate at {n:>5}: {natural:.4f}")

for a, b in ("LL", "LR", "RR", "TT"):
    rep = sumset_coverage(sets[a], sets[b], limit)
    print(f"{a}+{b}: missing {rep.missing[:12]}, Schnirelmann prefix {rep.schnirelmann_prefix:.4f}")

print("primes with 1, order 3, missing:", basis_order3_check("PrimesWith1", limit).missing)
print("twin primes, order 3, missing:", basis_order3_check("TwinPrimes", limit).missing)
