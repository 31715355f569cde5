import numpy as np
import pytest

from sievelab.counting import count_twin_goldbach
from sievelab.density import (
    basis_order3_check,
    density,
    from_members,
    index_set,
    sumset_coverage,
)
from sievelab.sieve import twin_flags
from oracles import is_prime, prime_table

LIMIT = 10**4


def brute_sumset(a, b, limit):
    a, b = set(a), set(b)
    covered = {x for x in a | b if x <= limit} | {x + y for x in a for y in b if x + y <= limit}
    return [k for k in range(1, limit + 1) if k not in covered]


def test_density_L14(flags_small):
    _, natural = density(index_set("L", 14, flags_small))
    assert natural == pytest.approx(11 / 14)


def test_density_full_set():
    s = from_members(range(1, 51), 50)
    assert density(s) == (1.0, 1.0)


def test_twin_density_decreases(flags_1e6):
    naturals = [density(index_set("T", n, flags_1e6))[1] for n in (10**3, 10**4, 10**5)]
    assert naturals == sorted(naturals, reverse=True)
    assert naturals[-1] == pytest.approx(int(twin_flags(flags_1e6).flags_t[: 10**5 + 1].sum()) / 10**5)


@pytest.mark.parametrize("a, b", [("L", "L"), ("L", "R"), ("R", "R")])
def test_order2_bases(flags_small, a, b):
    rep = sumset_coverage(index_set(a, LIMIT, flags_small), index_set(b, LIMIT, flags_small), LIMIT)
    assert rep.missing == []
    assert rep.schnirelmann_prefix == 1.0


def test_TT_matches_convolution_and_counting(flags_small):
    t = index_set("T", 3000, flags_small)
    rep = sumset_coverage(t, t, 3000)
    assert rep.missing == brute_sumset(t.elements(), t.elements(), 3000)
    twin = twin_flags(flags_small)
    members = set(t.elements().tolist())
    pair_sums = {x + y for x in members for y in members}
    for m in range(1, 3001):
        pair_missing = count_twin_goldbach(twin, m) == 0
        assert pair_missing == (m not in pair_sums)
        assert (m in rep.missing) == (pair_missing and m not in members)


def test_TT_missing_1e4(flags_small):
    t = index_set("T", LIMIT, flags_small)
    assert sumset_coverage(t, t, LIMIT).missing == [16, 67, 86, 131, 151, 186, 191, 211, 226, 541, 701]


def test_empty_sumset():
    e = from_members([], 20)
    assert sumset_coverage(e, e, 20).missing == list(range(1, 21))


def test_random_sumsets_against_brute_force():
    rng = np.random.default_rng(7)
    for _ in range(30):
        a = rng.choice(np.arange(1, 300), size=rng.integers(0, 20), replace=False)
        b = rng.choice(np.arange(1, 300), size=rng.integers(0, 20), replace=False)
        rep = sumset_coverage(from_members(a, 299), from_members(b, 299), 299)
        assert rep.missing == brute_sumset(a.tolist(), b.tolist(), 299)


def test_coverage_monotone(flags_small):
    t = index_set("T", 2000, flags_small)
    l = index_set("L", 2000, flags_small)
    both = from_members(np.union1d(t.elements(), l.elements()), 2000)
    assert set(sumset_coverage(both, both, 2000).missing) <= set(sumset_coverage(t, t, 2000).missing)


def test_order3_primes_with_1():
    assert basis_order3_check("PrimesWith1", LIMIT).missing == []
    rep = basis_order3_check("PrimesWith1", 2)
    assert rep.missing == [] and rep.natural_estimate == 1.0


def test_order3_twin_primes_brute_force():
    limit = 1500
    table = prime_table(limit + 2)
    members = [v for v in range(2, limit + 1) if table[v] and (table[v - 2] or table[v + 2])]
    two = set(members) | {x + y for x in members for y in members}
    three = two | {x + y for x in two for y in members}
    expected = [k for k in range(1, limit + 1) if k not in three]
    assert basis_order3_check("TwinPrimes", limit).missing == expected


def test_order3_twin_primes_reported():
    rep = basis_order3_check("TwinPrimes", LIMIT)
    assert 0 < len(rep.missing) < 100
    assert 1 in rep.missing


def test_primes_with_1_set_includes_small_primes():
    s = index_set("PrimesWith1", 30)
    assert s.elements().tolist() == [1] + [p for p in range(2, 31) if is_prime(p)]
