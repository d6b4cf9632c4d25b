#!/usr/bin/env python3
"""Divisor power sums, convolution sums by brute force, and space dimensions.

Everything downstream is built from sigma_k and the dimension formula, so
this demo starts at the bottom: what the convolution sum counts, and how
big the ambient form spaces are.
"""

from convsum import dim_spaces, divisors, sigma_k, w_oracle

print("divisors of 44:", divisors(44))
print("divisors of 52:", divisors(52))
print()

print("sigma(n) and sigma_3(n) for small n:")
for n in range(1, 11):
    print(f"  n={n:2d}: sigma={sigma_k(1, n):3d}  sigma_3={sigma_k(3, n):5d}")
print()

print("convolution sums by direct enumeration, W(alpha,beta)(n) = "
      "sum sigma(l) sigma(m) over alpha*l + beta*m = n:")
for alpha, beta in ((1, 44), (4, 11), (1, 52), (4, 13)):
    values = [w_oracle(alpha, beta, n) for n in range(40, 61)]
    print(f"  ({alpha:}, {beta:2d}), n = 40..60: {values}")
print()

print("the smallest n with a nonzero sum is alpha + beta "
      "(both parts must be >= 1):")
for alpha, beta in ((1, 44), (4, 11), (1, 52), (4, 13)):
    first = next(n for n in range(1, 200) if w_oracle(alpha, beta, n))
    assert first == alpha + beta
    print(f"  ({alpha}, {beta:2d}): first nonzero at n = {first}, "
          f"value {w_oracle(alpha, beta, first)}")
print()

print("weight-4 space dimensions (M = E + S):")
for level in (1, 11, 22, 26, 44, 52):
    m, e, s = dim_spaces(level, 4)
    print(f"  level {level:2d}: dim M = {m:2d}, dim E = {e}, dim S = {s:2d}")
