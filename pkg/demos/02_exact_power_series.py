#!/usr/bin/env python3
"""The exact power-series engine: Fraction coefficients, no rounding ever.

Shows the ring operations, series inversion (partition numbers fall out),
dilation, and the JSON form that round-trips arbitrarily large integers.
"""

from fractions import Fraction

from convsum import QSeries, euler_product

P = 24

s = QSeries(P, [1, -1])
print("s =", s.coeffs[:4], "...")
geo = s.invert()
print("1/s is the geometric series:", [int(c) for c in geo.coeffs[:8]], "...")
assert s * geo == QSeries.one(P)

print()
print("Euler function F(q) = prod (1 - q^n), pentagonal-sparse:")
F = euler_product(1, P)
print(" ", [int(c) for c in F.coeffs])

print("1/F generates the partition numbers:")
partitions = F.invert()
print(" ", [int(c) for c in partitions.coeffs])
assert [int(c) for c in partitions.coeffs[:10]] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]

print()
print("F(q)^3 has the alternating odd-number expansion "
      "(exponents k(k+1)/2):")
cube = F ** 3
nonzero = [(n, int(c)) for n, c in enumerate(cube.coeffs) if c]
print(" ", nonzero)

print()
print("dilation substitutes q -> q^t and is a ring homomorphism:")
a = QSeries(P, [1, 2, 3])
b = QSeries(P, [0, 1, Fraction(1, 2)])
assert (a * b).dilate(3) == a.dilate(3) * b.dilate(3)
print("  (a*b)(q^3) == a(q^3) * b(q^3)  ok")

print()
big = Fraction(10 ** 40 + 9, 7)
series = QSeries(2, [1, big, 3])
text = series.to_json()
print("JSON round-trip with a 41-digit numerator:",
      QSeries.from_json(text) == series)
