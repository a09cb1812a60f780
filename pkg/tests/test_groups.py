import pytest

from hopfpartial.groups import (FinGroup, GroupError, builtin_group, center, cosets,
                                enumerate_subgroups, first_cocycle_failure,
                                is_sign_coboundary, klein_four, klein_nontrivial_cocycle,
                                quotient, subgroup)


@pytest.mark.parametrize("name,order,subgroups,center_order", [
    ("K4", 4, 5, 4), ("S3", 6, 6, 1), ("D4", 8, 10, 2), ("Q8", 8, 6, 2), ("Z:6", 6, 4, 6),
])
def test_builtin_groups(name, order, subgroups, center_order):
    G = builtin_group(name)
    assert G.order == order
    assert len(enumerate_subgroups(G)) == subgroups
    assert center(G).order == center_order


def test_klein_indexing():
    G = klein_four()
    assert G.names == ("e", "a", "b", "ab")
    assert G.mul(1, 2) == 3 and all(G.mul(g, g) == 0 for g in range(4))


def test_quotient_by_a():
    G = klein_four()
    L = subgroup(G, ["a"])
    Q, proj, reps = quotient(G, L)
    assert Q.order == 2
    assert proj == (0, 0, 1, 1)
    assert len(cosets(G, L)) == 2


def test_non_normal_quotient_rejected():
    G = builtin_group("S3")
    L = next(H for H in enumerate_subgroups(G) if H.order == 2)
    assert not L.is_normal()
    with pytest.raises(GroupError):
        quotient(G, L)


def test_bad_cayley_tables():
    with pytest.raises(GroupError):
        FinGroup("bad", ((0, 1), (0, 1)), ("e", "x"))
    # a Latin square with identity that is not associative
    t = ((0, 1, 2, 3, 4), (1, 0, 3, 4, 2), (2, 4, 0, 1, 3), (3, 2, 4, 0, 1), (4, 3, 1, 2, 0))
    with pytest.raises(GroupError, match="associative"):
        FinGroup("loop", t, tuple("eabcd"))


def test_klein_cocycle_is_nontrivial():
    gamma = klein_nontrivial_cocycle()
    assert first_cocycle_failure(klein_four(), gamma.values) is None
    assert not is_sign_coboundary(gamma)


def test_klein_cocycle_not_in_char_2():
    from hopfpartial.exactlin import GF
    with pytest.raises(GroupError):
        klein_nontrivial_cocycle(GF(2))
