from fractions import Fraction as Fr

import pytest
from hypothesis import given

from hopfpartial.exactlin import GF
from hopfpartial.groups import builtin_group, klein_four
from hopfpartial.hopf import group_algebra
from hopfpartial.partial import (BaseFieldFunctional, brute_force_dual_group_algebra,
                                 brute_force_group_algebra, check_measuring,
                                 check_partial_action, classify_dual_group_algebra,
                                 classify_group_algebra, sweedler_completeness,
                                 sweedler_measuring)
from conftest import small_rationals


def test_group_algebra_k4_has_five():
    found = classify_group_algebra(klein_four())
    assert len(found) == 5
    assert len(brute_force_group_algebra(klein_four())) == 5


def test_group_algebra_s3_matches_subgroups():
    G = builtin_group("S3")
    assert len(brute_force_group_algebra(G)) == 6 == len(classify_group_algebra(G))


def test_dual_k4_lambda_values():
    found = classify_dual_group_algebra(klein_four())
    assert len(found) == 5
    lam = {f.label: f.lam for f in found}
    assert lam["L={e,a}"] == (Fr(1, 2), Fr(1, 2), 0, 0)
    assert lam["L={e,a,b,ab}"] == (Fr(1, 4),) * 4
    assert len(brute_force_dual_group_algebra(klein_four())) == 5


def test_dual_k4_over_f2_has_only_the_counit():
    found = classify_dual_group_algebra(klein_four(), GF(2))
    assert [f.label for f in found] == ["L={e}"]
    assert len(brute_force_dual_group_algebra(klein_four(), GF(2))) == 1


def test_non_subgroup_support_fails_pm3():
    H = group_algebra(klein_four())
    rep = BaseFieldFunctional(H, (Fr(1), Fr(1), Fr(1), Fr(0))).check()
    assert not rep.passed
    assert rep.first_failure().id == "PM3"
    assert rep.first_failure().counterexample == ("a", "b")


@pytest.mark.parametrize("lx", [0, 1, -2, Fr(7, 3)])
def test_sweedler_partial_family(lx):
    f = sweedler_measuring(lx)
    assert f.check().passed
    assert not f.measuring.is_global()


def test_sweedler_global():
    assert sweedler_measuring(0, global_=True).measuring.is_global()


def test_sweedler_lambda_g_nonzero_is_not_a_measuring():
    from hopfpartial.hopf import sweedler_algebra
    H = sweedler_algebra()
    assert not BaseFieldFunctional(H, (1, Fr(1, 2), 0, 0)).check().passed


def test_sweedler_symbolic_completeness():
    rep = sweedler_completeness()
    assert rep.passed
    assert rep.payload["families"] == ["global", "lambda_g=0 family"]


@given(small_rationals)
def test_every_base_field_measuring_is_a_partial_action(lx):
    assert check_partial_action(sweedler_measuring(lx).measuring).passed


def test_classified_measurings_are_partial_actions():
    for f in classify_dual_group_algebra(klein_four()) + classify_group_algebra(klein_four()):
        assert check_partial_action(f.measuring).passed
        assert check_measuring(f.measuring).payload["global"] == (f.lam == tuple(f.hopf.counit))
