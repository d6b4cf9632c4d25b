"""Representation counts by sums of four squares and by the octonary forms.

``r4`` counts integer solutions of a sum of four squares; the closed form
is 8 sigma(n) - 32 sigma(n/4) (with value 1 at n = 0), and the enumeration
oracle counts lattice points directly.  The octonary count for the form
a*(four squares) + b*(four squares) follows from the factorization of its
generating function: the count is a convolution of two r4 values, which the
closed form re-expresses through divisor sums and convolution sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Callable

from . import convolution
from .arith import sigma_k, sigma_k_frac

CLOSED_FORM_PAIRS = ((1, 11), (1, 13))
DEFAULT_ENUMERATION_BOUND = 500

WProvider = Callable[[int, int, int], int]


@dataclass(frozen=True)
class RepQuery:
    """One octonary count request: coefficients (a, b) and the target n."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("form coefficients must be positive")
        if self.n < 0:
            raise ValueError("n must be non-negative")


def r4_jacobi(n: int) -> int:
    """Four-square count via the divisor-sum identity."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n == 0:
        return 1
    return 8 * sigma_k(1, n) - 32 * sigma_k_frac(1, n, 4)


@lru_cache(maxsize=None)
def _r4_count(n: int) -> int:
    count = 0
    s1 = isqrt(n)
    for x1 in range(-s1, s1 + 1):
        r1 = n - x1 * x1
        s2 = isqrt(r1)
        for x2 in range(-s2, s2 + 1):
            r2 = r1 - x2 * x2
            s3 = isqrt(r2)
            for x3 in range(-s3, s3 + 1):
                r3 = r2 - x3 * x3
                x4 = isqrt(r3)
                if x4 * x4 == r3:
                    count += 1 if x4 == 0 else 2
    return count


def r4_enumerate(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    """Direct lattice count over |x_i| <= sqrt(n), all sign combinations."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n > bound:
        raise ValueError(
            f"n = {n} exceeds the enumeration bound {bound}; use r4_jacobi")
    return _r4_count(n)


def rep_count_enumerate(query: RepQuery,
                        bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    """Octonary count as sum of r4(l) * r4(m) over a*l + b*m = n.

    Exact for any (a, b); an eight-variable count without eight-dimensional
    enumeration.
    """
    if query.n > bound:
        raise ValueError(
            f"n = {query.n} exceeds the enumeration bound {bound}")
    total = 0
    l = 0
    while query.a * l <= query.n:
        rest = query.n - query.a * l
        if rest % query.b == 0:
            total += _r4_count(l) * _r4_count(rest // query.b)
        l += 1
    return total


def default_w_provider(b: int, max_n: int, method: str = "closed") -> WProvider:
    """Convolution-sum source for the closed octonary count with pair (1, b).

    The (1, b) sums always come from the series oracle; the (4, b) and
    (1, 4b) sums come from the exact closed forms, or from the oracle when
    ``method="oracle"``.
    """
    if method not in ("closed", "oracle"):
        raise ValueError(f"unknown method {method!r}")
    series = {(1, b): convolution.w_series_oracle(1, b, max_n)}
    for pair in ((4, b), (1, 4 * b)):
        if method == "closed":
            series[pair] = convolution.w_closed_table(pair, max_n)
        else:
            series[pair] = convolution.w_series_oracle(*pair, max_n)

    def w(alpha: int, beta: int, n: int) -> int:
        if n < 0:
            return 0
        return series[(alpha, beta)][n]

    return w


def rep_count_closed(query: RepQuery, w: WProvider | None = None) -> int:
    """Closed-form octonary count for (a, b) in {(1, 11), (1, 13)}.

    Convolution values at n/4 follow the divisor-sum convention: they vanish
    unless 4 | n.
    """
    if (query.a, query.b) not in CLOSED_FORM_PAIRS:
        raise ValueError(
            f"closed form unavailable for ({query.a}, {query.b}); "
            f"supported: {CLOSED_FORM_PAIRS}")
    n, b = query.n, query.b
    if n == 0:
        return 1
    if w is None:
        w = default_w_provider(b, n)
    w_quarter = w(1, b, n // 4) if n % 4 == 0 else 0
    value = (8 * sigma_k(1, n) - 32 * sigma_k_frac(1, n, 4)
             + 8 * sigma_k_frac(1, n, b) - 32 * sigma_k_frac(1, n, 4 * b)
             + 64 * w(1, b, n) + 1024 * w_quarter
             - 256 * (w(4, b, n) + w(1, 4 * b, n)))
    if value < 0:
        raise ArithmeticError(f"negative representation count {value} at {query}")
    return value
