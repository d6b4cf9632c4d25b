"""Convolution sums of the divisor function: brute force and closed forms.

The convolution sum of a pair (alpha, beta) at n adds sigma(l) * sigma(m)
over all non-negative l, m with alpha*l + beta*m = n; terms with a zero
part vanish because sigma(0) = 0.  ``w_oracle`` evaluates this directly,
``w_series_oracle`` through a product of dilated sigma series, and
``w_closed`` through the exact closed forms for the four pairs with
alpha * beta in {44, 52}.  Closed-form output is always checked for
integrality and non-negativity before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import eta, tables
from .arith import sigma_k, sigma_k_frac
from .eisenstein import EisensteinPair
from .qseries import QSeries
from .spaces import CoefficientSolution

EVALUATED_PAIRS = ((1, 44), (4, 11), (1, 52), (4, 13))


class IntegralityError(ArithmeticError):
    """A closed form produced a non-integral or negative value."""


def w_oracle(alpha: int, beta: int, n: int) -> int:
    """Brute-force convolution sum; total in n (0 for n < alpha + beta)."""
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be positive")
    total = 0
    l = 1
    while alpha * l <= n - beta:
        rest = n - alpha * l
        if rest % beta == 0:
            total += sigma_k(1, l) * sigma_k(1, rest // beta)
        l += 1
    return total


def w_series_oracle(alpha: int, beta: int, precision: int) -> list[int]:
    """Convolution sums for n = 0..precision via a dilated series product."""
    s = QSeries(precision, [0] + [sigma_k(1, n) for n in range(1, precision + 1)])
    prod = s.dilate(alpha) * s.dilate(beta)
    return [int(c) for c in prod.coeffs]


@dataclass(frozen=True)
class ConvolutionFormula:
    """Exact closed form: sigma_3 weights per divisor, linear sigma terms
    (delta, c0, c1) meaning (c0 + c1*n) * sigma(n/delta), and weights on the
    cusp expansions listed in ``cusp_rows``."""

    pair: EisensteinPair
    sigma3_terms: tuple[tuple[int, Fraction], ...]
    sigma1_terms: tuple[tuple[int, Fraction, Fraction], ...]
    cusp_terms: tuple[Fraction, ...]
    cusp_rows: tuple[eta.EtaQuotient, ...]

    @property
    def sigma3_map(self) -> dict[int, Fraction]:
        return dict(self.sigma3_terms)

    def evaluate(self, n: int, cusp_values) -> Fraction:
        """Raw rational value at n; cusp_values[j][n] supplies the j-th
        cusp coefficient."""
        total = Fraction(0)
        for d, c in self.sigma3_terms:
            s = sigma_k_frac(3, n, d)
            if s:
                total += c * s
        for d, c0, c1 in self.sigma1_terms:
            s = sigma_k_frac(1, n, d)
            if s:
                total += (c0 + c1 * n) * s
        for c, series in zip(self.cusp_terms, cusp_values):
            v = series[n]
            if v:
                total += c * v
        return total


def _cusp_rows_for(pair: tuple[int, int]) -> tuple[eta.EtaQuotient, ...]:
    level = pair[0] * pair[1]
    if level == 52:
        return eta.repaired_table_rows()
    return eta.table_rows(level)


def closed_form(pair: tuple[int, int]) -> ConvolutionFormula:
    """The canonical exact closed form for one of the four covered pairs."""
    pair = tuple(pair)
    if pair not in tables.CLOSED_FORMS:
        raise ValueError(f"closed form unavailable for {pair}")
    s3, lin, cusp = tables.CLOSED_FORMS[pair]
    return ConvolutionFormula(
        pair=EisensteinPair(*pair),
        sigma3_terms=tuple(sorted(s3.items())),
        sigma1_terms=lin,
        cusp_terms=cusp,
        cusp_rows=_cusp_rows_for(pair),
    )


def reported_closed_form(pair: tuple[int, int]) -> ConvolutionFormula:
    """The previously reported variant, over the printed rows; retained for
    comparison (the level-52 variants do not evaluate correctly)."""
    pair = tuple(pair)
    s3, lin, cusp = tables.REPORTED_CLOSED_FORMS[pair]
    return ConvolutionFormula(
        pair=EisensteinPair(*pair),
        sigma3_terms=tuple(sorted(s3.items())),
        sigma1_terms=lin,
        cusp_terms=cusp,
        cusp_rows=eta.table_rows(pair[0] * pair[1]),
    )


def formula_from_solution(solution: CoefficientSolution) -> ConvolutionFormula:
    """Rearrange an expansion of the squared Eisenstein combination into the
    closed form for the convolution sum of its pair."""
    a, b = solution.pair.alpha, solution.pair.beta
    denom = 1152 * a * b
    s3 = {}
    for d, x in solution.eisenstein_weights.items():
        c = -240 * x
        if d == a:
            c += 240 * a * a
        if d == b:
            c += 240 * b * b
        s3[d] = c / denom
    lin = ((a, Fraction(1, 24), Fraction(-1, 4 * b)),
           (b, Fraction(1, 24), Fraction(-1, 4 * a)))
    cusp = tuple(-y / denom for y in solution.cusp_weights)
    return ConvolutionFormula(
        pair=solution.pair,
        sigma3_terms=tuple(sorted(s3.items())),
        sigma1_terms=lin,
        cusp_terms=cusp,
        cusp_rows=solution.cusp_rows,
    )


def cusp_values(formula: ConvolutionFormula, precision: int) -> tuple[QSeries, ...]:
    """Expansions of the formula's cusp rows at the needed precision."""
    return tuple(eta.expand(row, precision) for row in formula.cusp_rows)


def w_closed(pair: tuple[int, int], n: int,
             cusp_coeffs: tuple[QSeries, ...] | None = None,
             formula: ConvolutionFormula | None = None) -> int:
    """Closed-form convolution sum at n; exact, with integrality enforced.

    ``cusp_coeffs`` may carry pre-expanded cusp series (they must match the
    formula's rows and reach the requested n); by default they are expanded
    on demand.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if formula is None:
        formula = closed_form(pair)
    if cusp_coeffs is None:
        cusp_coeffs = cusp_values(formula, n)
    elif any(s.precision < n for s in cusp_coeffs):
        raise ValueError(
            f"cusp expansions reach precision "
            f"{min(s.precision for s in cusp_coeffs)}, below n = {n}")
    value = formula.evaluate(n, cusp_coeffs)
    if value.denominator != 1 or value < 0:
        raise IntegralityError(
            f"closed form for {pair} evaluates to {value} at n = {n}")
    return int(value)


def w_closed_table(pair: tuple[int, int], max_n: int,
                   formula: ConvolutionFormula | None = None) -> list[int]:
    """Closed-form values for n = 0..max_n (index 0 is 0 by convention)."""
    if max_n < 1:
        closed_form(pair)  # still validate the pair
        return [0][:max_n + 1]
    if formula is None:
        formula = closed_form(pair)
    coeffs = cusp_values(formula, max_n)
    return [0] + [w_closed(pair, n, coeffs, formula)
                  for n in range(1, max_n + 1)]
