"""Divisor arithmetic and dimension formulas for weight-k form spaces on Gamma0(N)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"divisors: need n >= 1, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return tuple(small + large[::-1])


@dataclass(frozen=True)
class DivisorProfile:
    """A positive integer with its ascending divisor list."""

    n: int
    divisors: tuple[int, ...]

    @classmethod
    def of(cls, n: int) -> DivisorProfile:
        return cls(n, divisors(n))

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if tuple(self.divisors) != divisors(self.n):
            raise ValueError(f"invalid divisor list for {self.n}")


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as ((p, e), ...), ascending p."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def sigma_k(k: int, m: int) -> int:
    """Sum of k-th powers of positive divisors; 0 for m outside the naturals."""
    if k < 0:
        raise ValueError(f"sigma_k: need k >= 0, got {k}")
    if m <= 0:
        return 0
    return sum(d ** k for d in divisors(m))


def sigma_k_frac(k: int, n: int, delta: int) -> int:
    """sigma_k(n/delta) when delta | n, else 0."""
    if delta < 1:
        raise ValueError(f"sigma_k_frac: need delta >= 1, got {delta}")
    return sigma_k(k, n // delta) if n % delta == 0 else 0


def sigma(m: int) -> int:
    return sigma_k(1, m)


def sigma3(m: int) -> int:
    return sigma_k(3, m)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi: need n >= 1, got {n}")
    out = n
    for p, _ in prime_factors(n):
        out = out // p * (p - 1)
    return out


def _nu2(n: int) -> int:
    """Count of elliptic points of order 2 on Gamma0(n)."""
    if n % 4 == 0:
        return 0
    out = 1
    for p, _ in prime_factors(n):
        if p == 2:
            continue  # (-1|2) = 0, factor 1
        out *= 2 if p % 4 == 1 else 0
    return out


def _nu3(n: int) -> int:
    """Count of elliptic points of order 3 on Gamma0(n)."""
    if n % 9 == 0:
        return 0
    out = 1
    for p, _ in prime_factors(n):
        if p == 3:
            continue  # (-3|3) = 0, factor 1
        out *= 2 if p % 3 == 1 else 0
    return out


def _nu_inf(n: int) -> int:
    """Cusp count of Gamma0(n)."""
    return sum(euler_phi(gcd(d, n // d)) for d in divisors(n))


def _index(n: int) -> int:
    """Index of Gamma0(n) in the full modular group."""
    out = n
    for p, _ in prime_factors(n):
        out = out // p * (p + 1)
    return out


def genus(n: int) -> int:
    """Genus of the modular curve attached to Gamma0(n)."""
    g = (Fraction(1) + Fraction(_index(n), 12) - Fraction(_nu2(n), 4)
         - Fraction(_nu3(n), 3) - Fraction(_nu_inf(n), 2))
    if g.denominator != 1:
        raise ArithmeticError(f"non-integral genus {g} at level {n}")
    return int(g)


def dim_spaces(level: int, weight: int) -> tuple[int, int, int]:
    """(dim M_k, dim E_k, dim S_k) for Gamma0(level), trivial character.

    Only even weights k >= 4 are supported; there the Eisenstein part has
    dimension equal to the cusp count and the cusp-form dimension follows
    the standard index / elliptic-point / cusp-count formula.
    """
    if level < 1:
        raise ValueError(f"level must be positive, got {level}")
    if weight % 2 or weight < 4:
        raise ValueError(f"need even weight >= 4, got {weight}")
    g = genus(level)
    nu_inf = _nu_inf(level)
    dim_s = ((weight - 1) * (g - 1) + (weight // 2 - 1) * nu_inf
             + (weight // 4) * _nu2(level) + (weight // 3) * _nu3(level))
    if dim_s < 0:
        raise ArithmeticError(f"negative cusp dimension at ({level}, {weight})")
    dim_e = nu_inf
    return dim_e + dim_s, dim_e, dim_s
