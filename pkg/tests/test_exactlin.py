from fractions import Fraction as Fr

import pytest
import sympy
from hypothesis import given, strategies as st

from hopfpartial.exactlin import (GF, QQ, FieldMismatch, LinMap, LiteralError, Subspace,
                                  VecSpace, field_from_name, nullspace, rref, solve_linear,
                                  subspace_closure, tensor, vadd, vscale)
from conftest import small_rationals

matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(small_rationals, min_size=c, max_size=c),
                       min_size=r, max_size=r)))


def test_prime_field_arithmetic():
    F = GF(7)
    assert F(3) * F(5) == F(1)
    assert F(3) / F(5) == F(2)
    assert F.parse("3 mod 7") == F(3)
    assert F.parse("1/2") == F(4)
    assert F.format(F(-1)) == "6 mod 7"


def test_fields_never_mix():
    with pytest.raises(FieldMismatch):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatch):
        QQ(GF(5)(2))


@pytest.mark.parametrize("text", ["1/0", "abc", "1.5", "2/"])
def test_bad_rational_literals(text):
    with pytest.raises(LiteralError):
        QQ.parse(text)


def test_modp_literal_for_wrong_prime():
    with pytest.raises(LiteralError):
        GF(5).parse("3 mod 7")


def test_field_names():
    assert field_from_name("Q") == QQ
    assert field_from_name("Fp:3") == GF(3)
    with pytest.raises(ValueError):
        field_from_name("R")
    with pytest.raises(ValueError):
        GF(4)


@given(matrices)
def test_rank_matches_sympy(rows):
    _, pivots = rref(rows, len(rows[0]))
    assert len(pivots) == sympy.Matrix(rows).rank()


@given(matrices)
def test_nullspace_is_kernel(rows):
    n = len(rows[0])
    ker = nullspace(rows, n)
    assert len(ker) == n - sympy.Matrix(rows).rank()
    for v in ker:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@given(matrices, st.data())
def test_solve_linear_solves_consistent_systems(rows, data):
    n = len(rows[0])
    x0 = data.draw(st.lists(small_rationals, min_size=n, max_size=n))
    b = [sum(a * x for a, x in zip(r, x0)) for r in rows]
    x = solve_linear(rows, b, QQ)
    assert x is not None
    assert [sum(a * v for a, v in zip(r, x)) for r in rows] == b


def test_solve_linear_inconsistent():
    assert solve_linear(((Fr(1), Fr(1)), (Fr(1), Fr(1))), (Fr(0), Fr(1)), QQ) is None


def test_solve_linear_free_variables_zero():
    assert solve_linear(((Fr(1), Fr(1)),), (Fr(3),), QQ) == (Fr(3), Fr(0))


@given(st.lists(small_rationals, min_size=3, max_size=3),
       st.lists(small_rationals, min_size=3, max_size=3),
       st.lists(small_rationals, min_size=2, max_size=2))
def test_tensor_bilinear(u, u2, v):
    u, u2, v = tuple(u), tuple(u2), tuple(v)
    assert tensor(vadd(u, u2), v) == vadd(tensor(u, v), tensor(u2, v))
    assert tensor(vscale(Fr(3), u), v) == vscale(Fr(3), tensor(u, v))


def test_subspace_membership_and_coordinates():
    S = Subspace.span(3, [(Fr(1), Fr(1), Fr(0)), (Fr(0), Fr(1), Fr(1))], QQ)
    assert S.dim == 2
    v = (Fr(2), Fr(5), Fr(3))
    assert v in S
    assert S.from_coordinates(S.coordinates(v)) == v
    assert (Fr(1), Fr(0), Fr(0)) not in S


def test_subspace_closure_of_matrix_units():
    # products of E11 and E12 inside 2x2 matrices close up to span{E11, E12}
    n = 4
    basis = [tuple(Fr(int(i == k)) for k in range(n)) for i in range(n)]

    def mul(u, v):
        a = ((u[0], u[1]), (u[2], u[3]))
        b = ((v[0], v[1]), (v[2], v[3]))
        c = [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
        return (c[0][0], c[0][1], c[1][0], c[1][1])

    S = subspace_closure([basis[0], basis[1]], mul, n, QQ)
    assert S.dim == 2
    assert subspace_closure(S.basis, mul, n, QQ).dim == S.dim
    S2 = subspace_closure([basis[1], basis[2]], mul, n, QQ)
    assert S2.dim == 4


def test_linmap_rank_and_injectivity():
    V, W = VecSpace(("x", "y")), VecSpace(("p", "q", "r"))
    f = LinMap.from_columns(V, W, [(Fr(1), Fr(0), Fr(1)), (Fr(2), Fr(0), Fr(2))], QQ)
    assert f.rank() == 1 and not f.is_injective()
    assert f((Fr(1), Fr(1))) == (Fr(3), Fr(0), Fr(3))
