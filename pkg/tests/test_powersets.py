import pytest

from polydot_cmpc.powersets import (
    SchemeParams,
    check_conditions,
    important_powers,
    p_CA,
    p_CB,
    p_SA,
    p_SB,
    sumset,
    support_H,
)


def grid(smax=8, tmax=8, st_cap=48, zslack=8):
    for s in range(1, smax + 1):
        for t in range(1, tmax + 1):
            if s * t > st_cap:
                continue
            for z in range(1, 2 * t * s + zslack + 1):
                yield SchemeParams(s, t, z)


SMALL_GRID = [p for p in grid(smax=6, tmax=6, st_cap=30, zslack=5)]


def test_params_validation():
    with pytest.raises(ValueError):
        SchemeParams(0, 2, 1)
    with pytest.raises(ValueError):
        SchemeParams(2, 2, 0)


def test_derived_scalars():
    p = SchemeParams(4, 15, 100)
    assert p.theta == 2 * 60 - 15
    assert p.tau == p.theta - 60 - 15
    assert p.p == 2


def test_p_for_s_equals_one_is_t_minus_one():
    assert SchemeParams(1, 5, 3).p == 4


def test_p_CA_scalar_case():
    assert p_CA(SchemeParams(1, 1, 1)) == {0}


def test_p_CA_two_by_two():
    assert p_CA(SchemeParams(2, 2, 2)) == {0, 1, 2, 3}


def test_p_CA_is_contiguous_range():
    params = SchemeParams(4, 15, 1)
    assert p_CA(params) == frozenset(range(60))


def test_p_CB_two_by_two():
    assert p_CB(SchemeParams(2, 2, 2)) == {0, 2, 6, 8}


def test_p_CB_matdot_like_row():
    assert p_CB(SchemeParams(2, 1, 2)) == {0, 1}


def test_p_CB_column_only():
    assert p_CB(SchemeParams(1, 2, 1)) == {0, 2}


def test_p_SA_small_z():
    assert p_SA(SchemeParams(2, 2, 2)) == {4, 5}


def test_p_SA_matdot_like_row():
    # matches F_A = A1 + A2 x + mask x^2 + mask x^3
    assert p_SA(SchemeParams(2, 1, 2)) == {2, 3}


def test_p_SA_s_equals_one():
    assert p_SA(SchemeParams(1, 2, 3)) == {4, 5, 6}


def test_p_SA_windowed_case():
    # z > ts - t with s,t > 1 spills across theta-strided windows
    params = SchemeParams(2, 2, 3)
    assert params.p == 1
    assert p_SA(params) == {4, 5, 10}


def test_p_SB_large_z():
    assert p_SB(SchemeParams(2, 2, 2)) == {10, 11}


def test_p_SB_matdot_like_row():
    assert p_SB(SchemeParams(2, 1, 2)) == {2, 3}


def test_p_SB_small_z_branch():
    params = SchemeParams(5, 2, 2)
    assert params.tau == 6
    assert p_SB(params) == {10, 11}


def test_p_SB_windowed_midrange():
    # tau = 4, (tau+1)/2 < z <= tau picks the gap-window branch
    params = SchemeParams(4, 2, 3)
    assert params.tau == 4
    assert params.p_prime == 1
    assert p_SB(params) == {8, 9, 22}


def test_important_powers_matdot_like_row():
    assert important_powers(SchemeParams(2, 1, 2)) == {1}


def test_important_powers_two_by_two():
    assert important_powers(SchemeParams(2, 2, 2)) == {2, 3, 8, 9}


def test_important_powers_scalar():
    assert important_powers(SchemeParams(1, 1, 1)) == {0}


def test_sumset_identity():
    assert sumset({0}, {3, 5}) == {3, 5}


def test_sumset_small():
    assert sumset({0, 1}, {0, 2}) == {0, 1, 2, 3}


def test_sumset_window_union():
    got = sumset(frozenset(range(6)), {0, 2, 6, 8, 10, 11})
    assert got == frozenset(range(17))


def test_support_H_matdot_like_row():
    assert len(support_H(SchemeParams(2, 1, 2))) == 7


def test_support_H_two_by_two():
    assert support_H(SchemeParams(2, 2, 2)) == frozenset(range(17))


def test_support_H_scalar_case():
    assert support_H(SchemeParams(1, 1, 1)) == {0, 1, 2}


def test_check_conditions_examples():
    assert check_conditions(SchemeParams(2, 2, 2))[0]
    assert check_conditions(SchemeParams(2, 1, 2))[0]


def test_conditions_catch_bad_secret_support():
    # planting the secret terms at {1, 2} for (s=2, t=1) collides with the
    # single important power 1 via C3's coded-A sumset
    params = SchemeParams(2, 1, 2)
    imp = important_powers(params)
    bad = frozenset({1, 2})
    assert imp & sumset(bad, p_CA(params))


@pytest.mark.parametrize("params", SMALL_GRID, ids=lambda p: f"{p.s}-{p.t}-{p.z}")
def test_secret_supports_have_cardinality_z(params):
    assert len(p_SA(params)) == params.z
    assert len(p_SB(params)) == params.z


def test_coded_and_secret_supports_disjoint():
    for params in SMALL_GRID:
        assert not p_CA(params) & p_SA(params)
        assert not p_CB(params) & p_SB(params)


def test_conditions_hold_across_grid():
    bad = [p for p in grid() if not check_conditions(p)[0]]
    assert bad == []


def test_important_powers_only_reachable_from_coded_product():
    # every important power lies in P(C_A)+P(C_B) and in no other sumset
    for params in SMALL_GRID:
        imp = important_powers(params)
        d1 = sumset(p_CA(params), p_CB(params))
        assert imp <= d1
        assert imp <= support_H(params)
        others = (sumset(p_CA(params), p_SB(params))
                  | sumset(p_SA(params), p_CB(params))
                  | sumset(p_SA(params), p_SB(params)))
        assert not imp & others
