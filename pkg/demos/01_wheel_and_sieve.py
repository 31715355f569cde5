"""The two wheel classes, their composite progressions, and the bitmaps.

Run: python demos/01_wheel_and_sieve.py
"""
import numpy as np

from sievelab.segments import Direction, SegmentSpec, Source, format_segment, take
from sievelab.sieve import build_flags, twin_flags, verify_double_sieve
from sievelab.wheel import WheelClass, composite_progressions, term

# Terms 6i-1 and 6i+1 for the first few indices
print("A:", [term(WheelClass.A, i) for i in range(1, 18)])
print("B:", [term(WheelClass.B, i) for i in range(1, 18)])

# Each prime p >= 5 divides one residue class of indices in each sequence
for p in (5, 7, 11, 13):
    a, b = composite_progressions(p)
    print(f"p={p:2d}: A-multiples at i = {a.first_index} mod {p}, B-multiples at i = {b.first_index} mod {p}")

flags = build_flags(25)
twin = twin_flags(flags)

# Index form and prime form of the first segments
L14 = take(flags, SegmentSpec(Source.L, 14))
print("L_14  =", format_segment(L14))
print("A_14  =", format_segment(L14, WheelClass.A))
print("R'_14 =", format_segment(take(flags, SegmentSpec(Source.R, 14, 0, Direction.inverse))))
print("T     =", format_segment(take(twin, SegmentSpec(Source.T, 25))))

# Twin indices: each prime clears two residue classes
big = twin_flags(build_flags(10**4))
print("double sieve holds for 5..97:", all(verify_double_sieve(big, p) for p in build_flags(20).primes(97).tolist()))
print("twin pairs with index <= 10^4:", int(np.count_nonzero(big.flags_t)))
