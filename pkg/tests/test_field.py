import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polydot_cmpc.errors import (
    LengthMismatchError,
    SingularMatrixError,
    TargetNotInSupportError,
    ZeroInverseError,
)
from polydot_cmpc.field import (
    EvaluationPoints,
    FieldModulus,
    MERSENNE61,
    eval_sparse,
    extraction_rows,
    extraction_vector,
    fp_inv,
    is_prime,
    vandermonde_solve,
)

Q7 = FieldModulus(7)
Q101 = FieldModulus(101)


def test_default_modulus_is_the_mersenne_prime():
    assert FieldModulus().q == MERSENNE61
    assert is_prime(MERSENNE61)


def test_nonprime_modulus_rejected():
    with pytest.raises(ValueError):
        FieldModulus(100)


def test_inverse_identity():
    assert fp_inv(1, Q7) == 1


def test_inverse_two_mod_seven():
    assert fp_inv(2, Q7) == 4


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroInverseError):
        fp_inv(0, Q7)


@given(a=st.integers(min_value=1, max_value=MERSENNE61 - 1))
@settings(max_examples=50)
def test_inverse_roundtrip(a):
    mod = FieldModulus()
    assert (a * fp_inv(a, mod)) % mod.q == 1


def test_eval_constant_polynomial():
    assert eval_sparse([0], [5], 3, Q7) == 5


def test_eval_linear():
    assert eval_sparse([0, 1], [1, 1], 2, Q7) == 3


def test_eval_hand_checked():
    # 3*x^2 + x^5 at x=2 mod 101: 3*4 + 32 = 44
    assert eval_sparse([2, 5], [3, 1], 2, Q101) == 44


def test_eval_length_mismatch():
    with pytest.raises(LengthMismatchError):
        eval_sparse([0, 1], [1], 2, Q7)


def test_vandermonde_constant():
    pts = EvaluationPoints((5,), Q101)
    assert vandermonde_solve(pts, [0], [42]) == [42]


def test_vandermonde_linear_fit():
    pts = EvaluationPoints((1, 2), Q7)
    assert vandermonde_solve(pts, [0, 1], [3, 5]) == [1, 2]


def test_vandermonde_symmetric_points_singular():
    # support {0, 2} with points a and -a: the even-power columns coincide
    pts = EvaluationPoints((3, 101 - 3), Q101)
    with pytest.raises(SingularMatrixError):
        vandermonde_solve(pts, [0, 2], [1, 2])


def test_vandermonde_length_mismatch():
    pts = EvaluationPoints((1, 2), Q7)
    with pytest.raises(LengthMismatchError):
        vandermonde_solve(pts, [0, 1], [3])


def test_extraction_single_point():
    pts = EvaluationPoints((9,), Q101)
    assert extraction_vector(pts, [0], 0) == [1]


def test_extraction_hand_inverted_two_by_two():
    # V = [[1,1],[1,2]] over GF(7); row of V^{-1} for x^0 is [2, 6]
    pts = EvaluationPoints((1, 2), Q7)
    assert extraction_vector(pts, [0, 1], 0) == [2, 6]


def test_extraction_target_not_in_support():
    pts = EvaluationPoints((1, 2), Q7)
    with pytest.raises(TargetNotInSupportError):
        extraction_vector(pts, [0, 1], 5)


@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_extraction_recovers_random_sparse_coefficients(data):
    support = sorted(data.draw(st.sets(st.integers(0, 30),
                                       min_size=1, max_size=6)))
    q = 101
    pts_raw = data.draw(st.lists(st.integers(1, q - 1), unique=True,
                                 min_size=len(support), max_size=len(support)))
    coeffs = data.draw(st.lists(st.integers(0, q - 1), min_size=len(support),
                                max_size=len(support)))
    pts = EvaluationPoints(tuple(pts_raw), Q101)
    target = data.draw(st.sampled_from(support))
    try:
        row = extraction_vector(pts, support, target)
    except SingularMatrixError:
        return  # adversarial draws can be singular over a small field
    evals = [eval_sparse(support, coeffs, a, Q101) for a in pts]
    combined = sum(r * v for r, v in zip(row, evals)) % q
    assert combined == coeffs[support.index(target)]


def test_solve_then_eval_roundtrip():
    support = [0, 3, 7]
    coeffs = [4, 9, 55]
    pts = EvaluationPoints((2, 5, 11), Q101)
    values = [eval_sparse(support, coeffs, a, Q101) for a in pts]
    assert vandermonde_solve(pts, support, values) == coeffs


def test_extraction_rows_match_full_solve():
    support = [0, 2, 5, 6]
    pts = EvaluationPoints((3, 4, 10, 57), Q101)
    rows = extraction_rows(pts, support, support)
    coeffs = [7, 0, 13, 99]
    values = [eval_sparse(support, coeffs, a, Q101) for a in pts]
    for k, exp in enumerate(support):
        got = sum(int(r) * v for r, v in zip(rows[k], values)) % 101
        assert got == coeffs[k]


def test_evaluation_points_validation():
    with pytest.raises(ValueError):
        EvaluationPoints((0, 1), Q7)
    with pytest.raises(ValueError):
        EvaluationPoints((2, 2), Q7)
