import pytest
from hypothesis import given, strategies as st

from hopfpartial.exactlin import GF, QQ
from hopfpartial.groups import builtin_group, klein_four
from hopfpartial.hopf import (dual_group_algebra, dualize, group_algebra, hopf_from_spec,
                              iterated_comult, sweedler_algebra, tensor_square, verify_hopf)
from conftest import small_rationals


@pytest.mark.parametrize("spec", ["groupalg:K4", "dualgroupalg:K4", "groupalg:S3",
                                  "dualgroupalg:S3", "sweedler", "groupalg:Q8"])
def test_builtin_hopf_algebras_pass(spec):
    rep = verify_hopf(hopf_from_spec(spec))
    assert rep.passed, rep.to_text()


def test_dual_k4_over_f2():
    assert verify_hopf(dual_group_algebra(klein_four(), GF(2))).passed


def test_sweedler_flags():
    H = sweedler_algebra()
    assert not H.cocommutative and not H.is_commutative()
    assert group_algebra(builtin_group("S3")).cocommutative
    assert not dual_group_algebra(builtin_group("S3")).cocommutative


def test_sweedler_needs_odd_characteristic():
    with pytest.raises(ValueError):
        sweedler_algebra(GF(2))


def test_sweedler_three_legs_of_x():
    H = sweedler_algebra()
    one, g, x = 0, 1, 2
    legs = {t: c for c, t in H.sweedler(x, 3)}
    assert legs == {(x, one, one): 1, (g, x, one): 1, (g, g, x): 1}
    assert iterated_comult(H, H.basis(x), 3) == legs


@pytest.mark.parametrize("H", [sweedler_algebra(), group_algebra(klein_four())])
def test_duals_and_tensor_squares_are_hopf(H):
    assert verify_hopf(dualize(H)).passed
    assert verify_hopf(tensor_square(H)).passed


def test_corrupted_antipode_fails():
    H = sweedler_algebra()
    from dataclasses import replace
    from hopfpartial.exactlin import LinMap
    S = LinMap.identity(H.space, QQ)
    rep = verify_hopf(replace(H, antipode=S, _cache={}))
    assert rep.get("antipode").counterexample == ("x",)


vec4 = st.lists(small_rationals, min_size=4, max_size=4).map(tuple)


@given(vec4, vec4)
def test_sweedler_comult_multiplicative_on_random_elements(u, v):
    H = sweedler_algebra()
    lhs = H.comult_vec(H.mul(u, v))
    left, right = H.comult_vec(u), H.comult_vec(v)
    rhs = {}
    for (a, b), c in left.items():
        for (p, q), d in right.items():
            for s, x in enumerate(H.table[a][p]):
                for t, y in enumerate(H.table[b][q]):
                    if x and y:
                        rhs[(s, t)] = rhs.get((s, t), 0) + c * d * x * y
    assert lhs == {k: w for k, w in rhs.items() if w}


@given(vec4)
def test_antipode_is_anti_multiplicative(u):
    H = sweedler_algebra()
    v = (1, 0, 1, 2)
    assert H.S(H.mul(u, v)) == H.mul(H.S(v), H.S(u))
