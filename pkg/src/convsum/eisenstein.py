"""Weight-2 and weight-4 Eisenstein q-series and the squared-combination identity.

``series_L`` is the normalized weight-2 series ``1 - 24 sum sigma(n) q^n``
and ``series_M`` the weight-4 series ``1 + 240 sum sigma_3(n) q^n``.  For
coprime alpha < beta the square of ``alpha L(q^alpha) - beta L(q^beta)`` is
a weight-4 form on Gamma0(alpha*beta), and expanding the square termwise
expresses its coefficients through divisor sums and the convolution sum of
the pair; ``rhs_identity`` builds that expansion from supplied convolution
values so the two sides can be compared coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable

from .arith import sigma_k, sigma_k_frac
from .qseries import QSeries


@dataclass(frozen=True)
class EisensteinPair:
    """Coprime dilation factors alpha < beta."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("alpha and beta must be positive")
        if gcd(self.alpha, self.beta) != 1:
            raise ValueError(
                f"alpha and beta must be coprime, got ({self.alpha}, {self.beta})")
        if self.alpha >= self.beta:
            raise ValueError(
                f"need alpha < beta, got ({self.alpha}, {self.beta})")

    @property
    def level(self) -> int:
        return self.alpha * self.beta


def series_L(precision: int) -> QSeries:
    """1 - 24 sum sigma(n) q^n."""
    return QSeries(precision, [1] + [-24 * sigma_k(1, n)
                                     for n in range(1, precision + 1)])


def series_M(precision: int) -> QSeries:
    """1 + 240 sum sigma_3(n) q^n."""
    return QSeries(precision, [1] + [240 * sigma_k(3, n)
                                     for n in range(1, precision + 1)])


def lhs_square(pair: EisensteinPair, precision: int) -> QSeries:
    """(alpha L(q^alpha) - beta L(q^beta))^2, exactly."""
    l = series_L(precision)
    combo = (l.dilate(pair.alpha).scale(pair.alpha)
             - l.dilate(pair.beta).scale(pair.beta))
    return combo * combo


def rhs_identity(pair: EisensteinPair, w_values: Callable[[int], int],
                 precision: int) -> QSeries:
    """The termwise expansion of the square through convolution sums.

    ``w_values(n)`` must return the exact convolution sum of the pair at n.
    """
    a, b = pair.alpha, pair.beta
    coeffs = [(a - b) ** 2]
    for n in range(1, precision + 1):
        coeffs.append(
            240 * a * a * sigma_k_frac(3, n, a)
            + 240 * b * b * sigma_k_frac(3, n, b)
            + 48 * a * (b - 6 * n) * sigma_k_frac(1, n, a)
            + 48 * b * (a - 6 * n) * sigma_k_frac(1, n, b)
            - 1152 * a * b * w_values(n))
    return QSeries(precision, coeffs)
