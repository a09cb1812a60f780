from fractions import Fraction as Fr

from hopfpartial.convolution import (ConvMap, conv_inverse, conv_mul, conv_unit,
                                     convolution_algebra, from_function, ideal_inverse,
                                     idempotents_e_f1_f2, is_central, is_idempotent,
                                     is_L_invariant, first_L_invariance_failure)
from hopfpartial.groups import cyclic_group, subgroup
from hopfpartial.hopf import field_algebra, group_algebra, sweedler_algebra
from hopfpartial.twisted import klein_family, sweedler_partial_cocycle


def test_inverse_on_grouplikes_is_pointwise():
    H = group_algebra(cyclic_group(2))
    A = field_algebra()
    f = from_function(H, A, lambda i: ((Fr(1), Fr(2))[i],))
    assert conv_inverse(f).values == ((Fr(1),), (Fr(1, 2),))
    assert conv_inverse(from_function(H, A, lambda i: ((Fr(1), Fr(0))[i],))) is None


def test_antipode_is_inverse_of_identity():
    H = sweedler_algebra()
    ident = from_function(H, H.algebra, lambda i: H.basis(i))
    S = conv_inverse(ident)
    assert S.values == tuple(H.S(H.basis(i)) for i in range(H.dim))


def test_convolution_algebra_unit_and_associativity():
    H = sweedler_algebra()
    amb = convolution_algebra(H, field_algebra())
    assert amb.dim == 4
    assert all(c.passed for c in amb.checks())
    assert amb.unit == conv_unit(H, field_algebra()).flat()


def test_klein_idempotents_and_inverse():
    d, _ = klein_family(Fr(1, 8))
    e, f1, f2 = idempotents_e_f1_f2(d.measuring)
    assert is_idempotent(e) and is_idempotent(f1) and is_idempotent(f2)
    assert is_central(f1) and is_central(f2)
    assert ideal_inverse(d.omega, f1, f2) == d.omega


def test_sweedler_f1_not_central():
    d = sweedler_partial_cocycle(1, 0)
    _, f1, _ = idempotents_e_f1_f2(d.measuring)
    assert not is_central(f1)


def test_klein_omega_is_a_invariant_but_not_b_invariant():
    d, _ = klein_family(Fr(1, 8))
    G = d.hopf.group
    assert is_L_invariant(d.omega, G, subgroup(G, ["a"]))
    assert first_L_invariance_failure(d.omega, G, subgroup(G, ["b"])) is not None


def test_conv_mul_is_associative_on_klein_maps():
    d, _ = klein_family(Fr(1, 8))
    _, f1, f2 = idempotents_e_f1_f2(d.measuring)
    w = d.omega
    assert conv_mul(conv_mul(f1, f2), w) == conv_mul(f1, conv_mul(f2, w))
    assert isinstance(w, ConvMap)
