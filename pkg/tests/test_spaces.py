from fractions import Fraction

import pytest

from convsum import tables
from convsum.eisenstein import EisensteinPair, lhs_square
from convsum.eta import table_rows
from convsum.spaces import (BasisError, InconsistentSystemError,
                            SingularSystemError, build_basis,
                            derive_coefficients, repaired_basis,
                            verify_independence)

PRECISION = 120


@pytest.fixture(scope="module")
def basis44():
    return build_basis(44, PRECISION)


@pytest.fixture(scope="module")
def basis52():
    return build_basis(52, PRECISION)


@pytest.fixture(scope="module")
def basis52_repaired():
    return repaired_basis(PRECISION)


def test_basis_shapes(basis44, basis52):
    assert len(basis44.eisenstein_part) == 6
    assert len(basis44.cusp_part) == 15
    assert len(basis52.eisenstein_part) == 6
    assert len(basis52.cusp_part) == 18
    for s in basis44.cusp_part + basis52.cusp_part:
        assert s[0] == 0
    assert basis44.cusp_part[1].order() == 2  # fourth-power row starts at q^2


def test_basis_precision_guard():
    with pytest.raises(ValueError):
        build_basis(44, 10)


def test_independence_certificates(basis44, basis52, basis52_repaired):
    cert44 = verify_independence(basis44)
    cert52 = verify_independence(basis52)
    assert cert44.cusp_determinant == tables.CUSP_DETERMINANTS[44] == -396
    assert cert52.cusp_determinant == tables.CUSP_DETERMINANTS[52] == -1966080
    assert cert44.eisenstein_unit_triangular
    assert cert52.eisenstein_unit_triangular
    assert verify_independence(basis52_repaired).cusp_determinant != 0


@pytest.mark.parametrize("pair", [(1, 44), (4, 11)])
def test_derivation_level44(basis44, pair):
    solution = derive_coefficients(EisensteinPair(*pair), basis44)
    expected_s3, expected_y = tables.EXPANSION_COEFFS[pair]
    got_s3 = tuple(solution.sigma3_presentation()[d] for d in basis44.divisors)
    assert got_s3 == expected_s3
    assert solution.cusp_weights == expected_y
    assert solution.solving_indices == (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11,
                                        12, 13, 14, 15, 16, 17, 19, 20, 22)


def test_derivation_spot_values(basis44):
    sol = derive_coefficients(EisensteinPair(1, 44), basis44)
    assert sol.sigma3_presentation()[1] == Fraction(124464, 61)
    assert sol.cusp_weights[0] == Fraction(1440, 61)
    sol2 = derive_coefficients(EisensteinPair(4, 11), basis44)
    assert sol2.cusp_weights[0] == Fraction(110880, 61)


def test_reconstruction_spot_check(basis44):
    sol = derive_coefficients(EisensteinPair(1, 44), basis44)
    lhs = lhs_square(EisensteinPair(1, 44), PRECISION)
    from convsum.arith import sigma_k_frac
    for n in (1, 17, 44, 96, PRECISION):
        value = sum(240 * x * sigma_k_frac(3, n, d)
                    for d, x in sol.eisenstein_weights.items())
        value += sum(y * s[n]
                     for y, s in zip(sol.cusp_weights, basis44.cusp_part))
        assert value == lhs[n]


def test_level52_printed_rows_inconsistent(basis52):
    """The printed level-52 rows cannot express the squared combinations.

    Together with the six dilated Eisenstein series they satisfy a linear
    relation (rank 23 of 24), and elimination runs into a constraint of the
    form 0 = nonzero at q^22 for both pairs.
    """
    for pair in ((1, 52), (4, 13)):
        with pytest.raises(InconsistentSystemError, match="q\\^22"):
            derive_coefficients(EisensteinPair(*pair), basis52)


def test_level52_rank_deficiency(basis52):
    """One exact dependency among the 24 printed columns, none among 23."""
    from convsum.arith import sigma_k_frac
    columns = [[Fraction(240 * sigma_k_frac(3, n, d))
                for n in range(1, PRECISION + 1)] for d in basis52.divisors]
    columns += [[s[n] for n in range(1, PRECISION + 1)]
                for s in basis52.cusp_part]

    def rank(cols):
        rows = [list(r) for r in zip(*cols)]
        r = 0
        for col in range(len(cols)):
            piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = rows[r][col]
            rows[r] = [x / inv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            r += 1
        return r

    assert rank(columns) == 23
    assert rank(columns[:6] + columns[7:]) == 23  # dropping one Eisenstein column


def test_level52_dependency_certificate(basis52):
    """The pinned relation among the printed columns holds identically.

    It vanishes for every n up to the working precision, far past the
    degree bound of the weight-4 space, so it is an exact identity; the
    nonzero weight on row 7 is why swapping that row restores full rank.
    """
    from convsum.arith import sigma_k_frac
    eis_w, cusp_w = tables.LEVEL52_DEPENDENCY
    assert sum(eis_w) == 0  # constant terms cancel
    assert cusp_w[6] != 0
    for n in range(1, PRECISION + 1):
        total = sum(w * sigma_k_frac(3, n, d)
                    for w, d in zip(eis_w, basis52.divisors))
        total += sum(w * s[n] for w, s in zip(cusp_w, basis52.cusp_part))
        assert total == 0, f"dependency fails at n = {n}"


@pytest.mark.parametrize("pair", [(1, 52), (4, 13)])
def test_derivation_level52_repaired(basis52_repaired, pair):
    solution = derive_coefficients(EisensteinPair(*pair), basis52_repaired)
    expected_s3, expected_y = tables.EXPANSION_COEFFS[pair]
    got_s3 = tuple(solution.sigma3_presentation()[d]
                   for d in basis52_repaired.divisors)
    assert got_s3 == expected_s3
    assert solution.cusp_weights == expected_y


def test_repaired_solution_keeps_reported_spot_value(basis52_repaired):
    # the b_9 weight is insensitive to the repair and matches the reported one
    sol = derive_coefficients(EisensteinPair(4, 13), basis52_repaired)
    assert sol.cusp_weights[8] == -7488


def test_duplicated_row_breaks_derivation():
    # the squared combination needs the dropped direction, so elimination
    # hits an incompatible constraint
    rows = list(table_rows(44))
    rows[3] = rows[2]
    basis = build_basis(44, 100, cusp_rows=tuple(rows))
    with pytest.raises(InconsistentSystemError, match="not in the span"):
        derive_coefficients(EisensteinPair(1, 44), basis)


def test_rank_deficiency_with_target_in_span(monkeypatch):
    # against a target inside the deficient span, the scan exhausts all rows
    # without reaching full rank
    rows = list(table_rows(44))
    rows[3] = rows[2]
    basis = build_basis(44, 100, cusp_rows=tuple(rows))
    import convsum.spaces as spaces_module
    monkeypatch.setattr(spaces_module, "lhs_square",
                        lambda pair, precision: basis.cusp_part[2])
    with pytest.raises(SingularSystemError, match="rank 20 of 21"):
        derive_coefficients(EisensteinPair(1, 44), basis, precision=90)


def test_wrong_row_count_rejected():
    with pytest.raises(BasisError):
        build_basis(44, 100, cusp_rows=table_rows(44)[:-1])


def test_pair_level_mismatch(basis44):
    with pytest.raises(ValueError):
        derive_coefficients(EisensteinPair(1, 52), basis44)
