#!/usr/bin/env python3
"""The squared Eisenstein combination and its convolution-sum expansion.

For coprime alpha < beta, squaring alpha L(q^alpha) - beta L(q^beta) and
expanding termwise turns products of divisor sums into the convolution sum
of the pair.  Both sides are computed independently here and compared
coefficient by coefficient: the left by exact series multiplication, the
right from brute-force convolution values.
"""

from convsum import (EisensteinPair, lhs_square, rhs_identity, series_L,
                     series_M, w_series_oracle)

P = 200

L = series_L(8)
M = series_M(8)
print("weight-2 series:", [int(c) for c in L.coeffs[:6]], "...")
print("weight-4 series:", [int(c) for c in M.coeffs[:6]], "...")
print()

for alpha, beta in ((1, 44), (4, 11), (1, 52), (4, 13)):
    pair = EisensteinPair(alpha, beta)
    lhs = lhs_square(pair, P)
    w = w_series_oracle(alpha, beta, P)
    rhs = rhs_identity(pair, lambda n: w[n], P)
    assert lhs == rhs
    print(f"pair ({alpha},{beta}): constant term {int(lhs[0]):4d} "
          f"= (alpha-beta)^2; sides agree for all n <= {P}")

print()
print("one coefficient in detail, pair (1,44) at n = 45:")
pair = EisensteinPair(1, 44)
lhs = lhs_square(pair, 45)
w45 = w_series_oracle(1, 44, 45)[45]
print(f"  left side coefficient:  {int(lhs[45])}")
print(f"  brute-force convolution sum at 45: {w45} "
      "(only the pair l = m = 1 contributes)")
