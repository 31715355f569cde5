"""Fixed-gap pairs, Goldbach partitions and twin-pair sums from bitmap windows.

Run: python demos/02_pair_counts.py
"""
from sievelab.counting import (
    count_gap_pairs,
    count_goldbach,
    count_twin_goldbach,
    count_twin_patterns,
    find_twin_goldbach_exceptions,
)
from sievelab.segments import SegmentSpec, Source, combine, constant_value, count_nonzero, take
from sievelab.sieve import build_flags, twin_flags

flags = build_flags(10**6 // 6 + 20)
twin = twin_flags(flags)

# 28 = a_{i+5} - b_i: shifted L window against R
diff = combine(take(flags, SegmentSpec(Source.L, 21, 5)), take(flags, SegmentSpec(Source.R, 21)), "sub")
print("pairs (p, p+28), p <= 127:", count_nonzero(diff), "| bitmap:", count_gap_pairs(flags, 28, 127).count)
print("  every live cell carries index gap", constant_value(diff))

for g in (2, 4, 6, 28, 30, 32):
    res = count_gap_pairs(flags, g, 10**6)
    print(f"pi_{g}(10^6) = {res.count:6d}  via {res.construction_used.value}")

for g in (94, 96, 98, 1000):
    r = count_goldbach(flags, g)
    print(f"pi+({g}) = {r.count}  (half of the symmetric segment: {r.raw_half})")

print("prime quadruplets below 10^6:", count_twin_patterns(twin, 1, 166666).count)
print("twin-pair sums for m = 100:", count_twin_goldbach(twin, 100))
print("m <= 30000 with no twin-pair sum:", find_twin_goldbach_exceptions(twin, 30000))
