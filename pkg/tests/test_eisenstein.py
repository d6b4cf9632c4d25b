import pytest

from convsum.arith import sigma_k
from convsum.convolution import w_oracle, w_series_oracle
from convsum.eisenstein import (EisensteinPair, lhs_square, rhs_identity,
                                series_L, series_M)

PAIRS = ((1, 44), (4, 11), (1, 52), (4, 13))


def test_pair_validation():
    EisensteinPair(1, 44)
    with pytest.raises(ValueError):
        EisensteinPair(2, 44)  # not coprime
    with pytest.raises(ValueError):
        EisensteinPair(11, 4)  # wrong order
    with pytest.raises(ValueError):
        EisensteinPair(0, 3)
    assert EisensteinPair(4, 13).level == 52


def test_series_L_coefficients():
    l = series_L(10)
    assert l[0] == 1
    assert l[1] == -24
    assert l[6] == -288  # sigma(6) = 12
    assert all(l[n] == -24 * sigma_k(1, n) for n in range(1, 11))


def test_series_M_coefficients():
    m = series_M(10)
    assert m[0] == 1
    assert m[1] == 240
    assert m[2] == 2160  # sigma_3(2) = 9
    assert all(m[n] == 240 * sigma_k(3, n) for n in range(1, 11))


@pytest.mark.parametrize("pair,constant", [
    ((1, 44), 1849), ((4, 11), 49), ((1, 52), 2601), ((4, 13), 81)])
def test_lhs_constants(pair, constant):
    assert lhs_square(EisensteinPair(*pair), 8)[0] == constant


def test_rhs_first_coefficient():
    pair = EisensteinPair(1, 44)
    rhs = rhs_identity(pair, lambda n: w_oracle(1, 44, n), 4)
    assert rhs[0] == 1849
    assert rhs[1] == 240 + 48 * 38  # sigma_3(1) term plus the linear term


@pytest.mark.parametrize("alpha,beta", PAIRS)
def test_identity_against_brute_force(alpha, beta):
    precision = 150
    pair = EisensteinPair(alpha, beta)
    w = w_series_oracle(alpha, beta, precision)
    assert lhs_square(pair, precision) == rhs_identity(
        pair, lambda n: w[n], precision)
