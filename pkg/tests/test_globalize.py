from fractions import Fraction as Fr

import pytest

from hopfpartial.convolution import ConvMap, conv_unit
from hopfpartial.exactlin import LinMap
from hopfpartial.globalize import (build_globalization, check_wtilde,
                                   cocommutative_closure_check, extract_wtilde,
                                   group_case_inputs, klein_globalization_inputs,
                                   klein_wtilde_map, klein_x18_table,
                                   verify_klein_wtilde_equations)
from hopfpartial.hopf import field_algebra
from hopfpartial.partial import MeasuringData, global_measuring, sweedler_measuring
from hopfpartial.report import VerificationError
from hopfpartial.twisted import (GlobalTwistedAction, TwistedPartialActionData, klein_family,
                                 restrict_global_twisted, swap_algebra_example,
                                 trivial_twisted)

GLOBALIZATION_IDS = [
    "measuring", "unit-acts-trivially", "action-on-unit", "composition-law", "cocycle-law",
    "u-normalized", "u-invertible", "B-contains-unit", "B-closed-under-product",
    "B-closed-under-action", "B-contains-cocycle", "phi-injective", "phi-multiplicative",
    "ideal-i", "ideal-ii", "ideal-iii", "ideal-iv", "phi-image-is-ideal-of-B",
    "induced-action", "induced-cocycle", "induced-cocycle-inverse",
]


@pytest.fixture(scope="module")
def klein():
    d, w = klein_globalization_inputs()
    return d, w, build_globalization(d, w)


def flipped_X():
    X = [list(r) for r in klein_x18_table()]
    X[2][2] = -X[2][2]
    return X


def test_x18_table_passes_check_wtilde(klein):
    d, w, _ = klein
    assert check_wtilde(d, w).passed


def test_trivial_guess_fails_at_omega_recovery():
    d, _ = klein_family(Fr(1, 8))
    bad = check_wtilde(d, conv_unit(d.omega.source, d.target)).first_failure()
    assert bad.id == "wtilde-recovers-omega"
    assert bad.counterexample == ("p_e", "p_e")


def test_global_action_with_its_own_cocycle():
    g = swap_algebra_example()
    d = TwistedPartialActionData(MeasuringData(g.hopf, g.algebra, g.table), g.u, g.u_inv)
    assert check_wtilde(d, g.u).passed
    res = build_globalization(d, g.u)
    assert res.B.dim == g.algebra.dim
    assert res.phi.image().contains_subspace(res.B)
    ident = LinMap.identity(g.algebra.space)
    ex = extract_wtilde(g, ident, d)
    assert ex.wtilde.map == g.u and ex.wtilde.inverse == g.u_inv


def test_klein_globalization_runs_every_identity(klein):
    _, _, res = klein
    assert [c.id for c in res.report.checks] == GLOBALIZATION_IDS
    assert res.report.passed
    assert res.report.payload == {"dim_ambient": 4, "dim_B": 2}


def test_round_trip_reproduces_the_tables(klein):
    d, w, res = klein
    g, phi, _ = res.global_action()
    ex = extract_wtilde(g, phi, d)
    assert ex.report.passed
    assert ex.wtilde.map == w
    assert ex.report.get("wtilde-recovers-omega").passed
    assert ex.report.get("wtilde-recovers-omega-inverse").passed


def test_restriction_of_the_globalization_gives_back_the_data(klein):
    d, _, res = klein
    g, phi, e = res.global_action()
    r = restrict_global_twisted(g, e)
    assert r.report.passed
    back = lambda vec: r.inclusion(vec)
    for idx, val in enumerate(d.omega.values):
        assert back(r.data.omega.values[idx]) == phi(val)
        assert back(r.data.omega_prime.values[idx]) == phi(d.omega_prime.values[idx])
    for i in range(d.hopf.dim):
        assert back(r.data.measuring.on_one(i)) == phi(d.measuring.on_one(i))


def test_extraction_rejects_a_non_cocycle():
    g = swap_algebra_example()
    d = TwistedPartialActionData(MeasuringData(g.hopf, g.algebra, g.table), g.u, g.u_inv)
    u, ui = list(g.u.values), list(g.u_inv.values)
    a = 1
    u[a * 4 + a] = (Fr(2), Fr(3))
    ui[a * 4 + a] = (Fr(1, 2), Fr(1, 3))
    bad = GlobalTwistedAction(g.hopf, g.algebra, g.table, ConvMap(g.u.source, g.algebra, tuple(u)),
                              ConvMap(g.u.source, g.algebra, tuple(ui)))
    ex = extract_wtilde(bad, LinMap.identity(g.algebra.space), d)
    assert ex.wtilde is None
    assert ex.report.first_failure().id == "cocycle-law"


def test_build_refuses_a_bad_wtilde():
    d, _ = klein_family(Fr(1, 8))
    with pytest.raises(VerificationError):
        build_globalization(d, klein_wtilde_map(flipped_X(), d))


@pytest.mark.parametrize("kind,dim_b", [("klein-cocycle", 1), ("subgroup-a", 2)])
def test_group_case_globalizations(kind, dim_b):
    d, w = group_case_inputs(kind)
    res = build_globalization(d, w)
    assert res.report.payload["dim_B"] == dim_b
    assert cocommutative_closure_check(res).passed


def test_cocommutative_closure_for_klein(klein):
    rep = cocommutative_closure_check(klein[2])
    assert rep.passed
    assert [c.id for c in rep.checks][:3] == ["closed-under-product", "theta-identity",
                                               "cocycle-multiplies-submodule"]


def test_cocommutative_closure_rejects_sweedler():
    m = sweedler_measuring(0, global_=True).measuring
    d = trivial_twisted(m)
    res = build_globalization(d, d.omega)
    with pytest.raises(ValueError, match="cocommutative"):
        cocommutative_closure_check(res)


def test_klein_equations_for_the_x18_table():
    X = klein_x18_table()
    rep = verify_klein_wtilde_equations(X, X)
    assert rep.passed
    assert rep.payload["omega(p_e,p_e)"] == Fr(1, 8)


def test_klein_equations_zero_table():
    Z = [[Fr(0)] * 4 for _ in range(4)]
    rep = verify_klein_wtilde_equations(Z, Z)
    bad = rep.get("normalization-first-argument")
    assert not bad.passed and bad.counterexample == ("e",)
    assert rep.get("agrees-with-generic-identities").passed


def test_klein_equations_sign_flip():
    X = flipped_X()
    rep = verify_klein_wtilde_equations(X, klein_x18_table())
    bad = rep.get("normalization-first-argument")
    assert not bad.passed and bad.counterexample == ("b",)
    assert rep.get("agrees-with-generic-identities").passed


def test_no_builtin_wtilde_off_the_known_points():
    with pytest.raises(ValueError):
        klein_globalization_inputs(Fr(1, 3))
    d, w = klein_globalization_inputs(Fr(1, 4))
    assert build_globalization(d, w).report.passed


def test_global_measuring_on_field_globalizes_to_itself():
    from hopfpartial.hopf import group_algebra
    from hopfpartial.groups import klein_four
    H = group_algebra(klein_four())
    d = trivial_twisted(global_measuring(H, field_algebra()))
    res = build_globalization(d, d.omega)
    assert res.report.payload["dim_B"] == 1
