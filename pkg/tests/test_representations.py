import pytest

from convsum.arith import sigma_k, sigma_k_frac
from convsum.convolution import w_oracle
from convsum.representations import (RepQuery, default_w_provider,
                                     r4_enumerate, r4_jacobi,
                                     rep_count_closed, rep_count_enumerate)


def test_r4_examples():
    assert r4_jacobi(0) == 1
    assert r4_jacobi(1) == 8
    assert r4_jacobi(4) == 24
    assert r4_enumerate(0) == 1
    assert r4_enumerate(2) == 24  # (+-1, +-1, 0, 0) in all arrangements


def test_r4_identity():
    for n in range(0, 150):
        assert r4_jacobi(n) == r4_enumerate(n)


def test_r4_bounds_and_validation():
    with pytest.raises(ValueError, match="enumeration bound"):
        r4_enumerate(501)
    assert r4_enumerate(501, bound=501) == r4_jacobi(501)
    with pytest.raises(ValueError):
        r4_jacobi(-1)


def test_query_validation():
    with pytest.raises(ValueError):
        RepQuery(0, 11, 5)
    with pytest.raises(ValueError):
        RepQuery(1, 11, -1)


def test_rep_count_examples():
    assert rep_count_closed(RepQuery(1, 11, 11)) == 104
    assert rep_count_closed(RepQuery(1, 13, 1)) == 8
    assert rep_count_closed(RepQuery(1, 11, 0)) == 1
    # by four-square decomposition: r4(12) + r4(1)^2 = 96 + 64
    assert rep_count_enumerate(RepQuery(1, 11, 12)) == 160
    assert rep_count_closed(RepQuery(1, 11, 12)) == 160


def test_rep_count_unsupported_pair():
    with pytest.raises(ValueError, match="closed form unavailable"):
        rep_count_closed(RepQuery(1, 7, 5))


@pytest.mark.parametrize("b", [11, 13])
@pytest.mark.parametrize("method", ["closed", "oracle"])
def test_closed_equals_enumeration(b, method):
    limit = 60
    w = default_w_provider(b, limit, method=method)
    for n in range(limit + 1):
        query = RepQuery(1, b, n)
        assert rep_count_closed(query, w) == rep_count_enumerate(query)


def test_counts_are_positive_multiples_of_eight():
    w = default_w_provider(11, 40)
    for n in range(1, 41):
        count = rep_count_closed(RepQuery(1, 11, n), w)
        assert count > 0 and count % 8 == 0


@pytest.mark.parametrize("b", [11, 13])
def test_substitution_identities(b):
    """Rescaling one summation variable by 4 turns the restricted double sums
    into convolution sums of (4,b) and (1,4b); b=11 lands on divisor 44."""
    for n in range(1, 160):
        quarter_left = sum(
            sigma_k_frac(1, l, 4) * sigma_k(1, (n - l) // b)
            for l in range(1, n) if (n - l) % b == 0)
        quarter_right = sum(
            sigma_k(1, l) * sigma_k_frac(1, (n - l) // b, 4)
            for l in range(1, n) if (n - l) % b == 0)
        both_quarters = sum(
            sigma_k_frac(1, l, 4) * sigma_k_frac(1, (n - l) // b, 4)
            for l in range(1, n) if (n - l) % b == 0)
        assert quarter_left == w_oracle(4, b, n)
        assert quarter_right == w_oracle(1, 4 * b, n)
        assert both_quarters == (w_oracle(1, b, n // 4) if n % 4 == 0 else 0)
