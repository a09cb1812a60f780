"""Finite groups as Cayley tables, subgroups, quotients and 2-cocycles.

Everything here is brute force. Subgroup enumeration grows cyclic subgroups one
generator at a time; that is fine for the orders we care about (|G| <= 16).
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property

from .exactlin import QQ


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FinGroup:
    name: str
    cayley: tuple
    names: tuple

    def __post_init__(self):
        n = len(self.cayley)
        if n == 0 or any(len(r) != n for r in self.cayley):
            raise GroupError("Cayley table must be square and non-empty")
        if len(self.names) != n or len(set(self.names)) != n:
            raise GroupError("need one distinct name per element")
        full = set(range(n))
        for r in self.cayley:
            if set(r) != full:
                raise GroupError("Cayley table is not a Latin square")
        for j in range(n):
            if {self.cayley[i][j] for i in range(n)} != full:
                raise GroupError("Cayley table is not a Latin square")
        e = self.identity
        if any(self.cayley[e][g] != g or self.cayley[g][e] != g for g in range(n)):
            raise GroupError("no two-sided identity")
        m = self.cayley
        for a, b, c in itertools.product(range(n), repeat=3):
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise GroupError(
                    f"not associative at ({self.names[a]}, {self.names[b]}, {self.names[c]})")

    @classmethod
    def from_op(cls, name, elements, op, names=None) -> "FinGroup":
        elements = list(elements)
        pos = {x: i for i, x in enumerate(elements)}
        table = tuple(tuple(pos[op(x, y)] for y in elements) for x in elements)
        if names is None:
            names = [str(x) for x in elements]
        return cls(name, table, tuple(names))

    @property
    def order(self) -> int:
        return len(self.cayley)

    def __len__(self):
        return self.order

    @cached_property
    def identity(self) -> int:
        for e in range(len(self.cayley)):
            if all(self.cayley[e][g] == g for g in range(len(self.cayley))):
                return e
        raise GroupError("no identity element")

    @cached_property
    def inverse(self) -> tuple:
        e = self.identity
        return tuple(self.cayley[g].index(e) for g in range(self.order))

    def mul(self, g: int, h: int) -> int:
        return self.cayley[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise GroupError(f"{self.name} has no element {name!r}") from None

    @cached_property
    def is_abelian(self) -> bool:
        return all(self.cayley[g][h] == self.cayley[h][g]
                   for g in range(self.order) for h in range(g))

    def __repr__(self):
        return f"FinGroup({self.name}, order={self.order})"


@dataclass(frozen=True, eq=False)
class SubgroupRef:
    parent: FinGroup
    elements: tuple

    def __post_init__(self):
        G, S = self.parent, set(self.elements)
        if G.identity not in S:
            raise GroupError("subgroup must contain the identity")
        for g in S:
            if G.inv(g) not in S or any(G.mul(g, h) not in S for h in S):
                raise GroupError(f"{sorted(G.names[x] for x in S)} is not closed")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.elements

    def __eq__(self, other):
        return (isinstance(other, SubgroupRef) and other.parent is self.parent
                and other.elements == self.elements)

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    @property
    def names(self) -> tuple:
        return tuple(self.parent.names[g] for g in self.elements)

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.mul(G.mul(g, h), G.inv(g)) in self.elements
                   for g in range(G.order) for h in self.elements)

    def is_central(self) -> bool:
        G = self.parent
        return all(G.mul(g, h) == G.mul(h, g) for g in range(G.order) for h in self.elements)

    def as_group(self) -> FinGroup:
        """The subgroup as a group in its own right, elements in sorted order."""
        G = self.parent
        pos = {g: i for i, g in enumerate(self.elements)}
        table = tuple(tuple(pos[G.mul(g, h)] for h in self.elements) for g in self.elements)
        label = "{" + ",".join(self.names) + "}"
        return FinGroup(f"{G.name}{label}", table, self.names)

    def __repr__(self):
        return f"SubgroupRef({self.parent.name}, {{{', '.join(self.names)}}})"


def closure(G: FinGroup, gens) -> tuple:
    S = {G.identity} | set(gens)
    frontier = list(S)
    while frontier:
        new = []
        for g in frontier:
            for h in list(S):
                for x in (G.mul(g, h), G.mul(h, g)):
                    if x not in S:
                        S.add(x)
                        new.append(x)
        frontier = new
    return tuple(sorted(S))


def subgroup(G: FinGroup, generators) -> SubgroupRef:
    """Subgroup generated by element indices or names."""
    idx = [G.index(g) if isinstance(g, str) else g for g in generators]
    return SubgroupRef(G, closure(G, idx))


def trivial_subgroup(G: FinGroup) -> SubgroupRef:
    return SubgroupRef(G, (G.identity,))


def whole_group(G: FinGroup) -> SubgroupRef:
    return SubgroupRef(G, tuple(range(G.order)))


def enumerate_subgroups(G: FinGroup) -> list:
    """All subgroups, sorted by order and then lexicographically.

    Every subgroup is reached by adjoining one element at a time to a smaller
    subgroup, so growing from the trivial group finds them all.
    """
    found = {(G.identity,)}
    frontier = [(G.identity,)]
    while frontier:
        new = []
        for S in frontier:
            for g in range(G.order):
                if g in S:
                    continue
                T = closure(G, S + (g,))
                if T not in found:
                    found.add(T)
                    new.append(T)
        frontier = new
    return [SubgroupRef(G, S) for S in sorted(found, key=lambda s: (len(s), s))]


def center(G: FinGroup) -> SubgroupRef:
    return SubgroupRef(G, tuple(g for g in range(G.order)
                                if all(G.mul(g, h) == G.mul(h, g) for h in range(G.order))))


def cosets(G: FinGroup, L: SubgroupRef) -> list:
    """Left cosets gL, ordered by smallest member (identity coset first)."""
    seen, out = set(), []
    for g in range(G.order):
        if g in seen:
            continue
        c = tuple(sorted(G.mul(g, x) for x in L.elements))
        seen.update(c)
        out.append(c)
    return sorted(out)


def quotient(G: FinGroup, L: SubgroupRef):
    """``(G/L, projection, transversal)`` for normal ``L``.

    The projection is a tuple mapping each element of G to its coset index;
    the transversal picks the smallest-index member of each coset, so the
    identity coset is represented by the identity.
    """
    if L.parent is not G:
        raise GroupError("subgroup belongs to a different group")
    if not L.is_normal():
        raise GroupError(f"{L} is not normal in {G.name}")
    cs = cosets(G, L)
    proj = [0] * G.order
    for i, c in enumerate(cs):
        for g in c:
            proj[g] = i
    reps = tuple(c[0] for c in cs)
    table = tuple(tuple(proj[G.mul(r, s)] for s in reps) for r in reps)
    names = tuple(f"{G.names[r]}L" for r in reps)
    Q = FinGroup(f"{G.name}/{{{','.join(L.names)}}}", table, names)
    return Q, tuple(proj), reps


# ---------------------------------------------------------------- builtins


def _perm_compose(p, q):
    # (p∘q)(i) = p(q(i))
    return tuple(p[i] for i in q)


def _cycle_name(p) -> str:
    seen, cycles = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j + 1)
            j = p[j]
        cycles.append("(" + " ".join(map(str, c)) + ")")
    return "".join(cycles) or "e"


def _perm_group(name, gens) -> FinGroup:
    n = len(gens[0])
    ident = tuple(range(n))
    elems = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = _perm_compose(x, g)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    ordered = [ident] + sorted(elems - {ident})
    return FinGroup.from_op(name, ordered, _perm_compose, [_cycle_name(p) for p in ordered])


def cyclic_group(n: int) -> FinGroup:
    if n < 1:
        raise GroupError("Z_n needs n >= 1")
    return FinGroup.from_op(f"Z{n}", range(n), lambda a, b: (a + b) % n,
                            [str(i) for i in range(n)])


def klein_four() -> FinGroup:
    """K4 = <a, b | a^2 = b^2 = e>, elements ordered e, a, b, ab.

    Element index ``i + 2j`` stands for ``a^i b^j``.
    """
    return FinGroup.from_op("K4", range(4), lambda x, y: x ^ y, ["e", "a", "b", "ab"])


def quaternion_group() -> FinGroup:
    # (sign, unit) with unit in 1, i, j, k
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def op(x, y):
        s, u = table[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    elems = [(s, u) for u in "1ijk" for s in (1, -1)]
    names = [("" if s == 1 else "-") + u for s, u in elems]
    return FinGroup.from_op("Q8", elems, op, names)


def builtin_group(name: str, n: int | None = None) -> FinGroup:
    """``Z_n`` (also ``Z:n``), ``K4``, ``S3``, ``D4`` or ``Q8``."""
    key = name.strip()
    m = re.fullmatch(r"Z[_:]?(\d+)", key)
    if m or key in ("Z", "Z_n"):
        order = int(m.group(1)) if m else n
        if order is None:
            raise GroupError("Z_n needs an order")
        return cyclic_group(order)
    if key == "K4":
        return klein_four()
    if key == "S3":
        return _perm_group("S3", [(1, 0, 2), (1, 2, 0)])
    if key == "D4":
        return _perm_group("D4", [(1, 2, 3, 0), (0, 3, 2, 1)])
    if key == "Q8":
        return quaternion_group()
    raise GroupError(f"unknown builtin group {name!r}")


# ---------------------------------------------------------------- 2-cocycles


@dataclass(frozen=True, eq=False)
class GroupCocycle:
    """Normalized 2-cocycle with values in the multiplicative group of a field."""

    group: FinGroup
    values: tuple
    field: object = QQ

    def __post_init__(self):
        G, v = self.group, self.values
        n = G.order
        if any(not v[g][h] for g in range(n) for h in range(n)):
            raise GroupError("cocycle values must be invertible")
        e = G.identity
        for g in range(n):
            if v[e][g] != 1 or v[g][e] != 1:
                raise GroupError(f"cocycle is not normalized at {G.names[g]}")
        bad = first_cocycle_failure(G, v)
        if bad is not None:
            raise GroupError("2-cocycle identity fails at (%s, %s, %s)" % tuple(
                G.names[x] for x in bad))

    def __call__(self, g: int, h: int):
        return self.values[g][h]

    def inverse(self) -> "GroupCocycle":
        return GroupCocycle(self.group, tuple(tuple(1 / x for x in r) for r in self.values),
                            self.field)


def first_cocycle_failure(G: FinGroup, v):
    """First triple violating ``v(h,k) v(g,hk) = v(g,h) v(gh,k)``, or None."""
    m = G.mul
    for g, h, k in itertools.product(range(G.order), repeat=3):
        if v[h][k] * v[g][m(h, k)] != v[g][h] * v[m(g, h)][k]:
            return (g, h, k)
    return None


def trivial_cocycle(G: FinGroup, F=QQ) -> GroupCocycle:
    return GroupCocycle(G, tuple((F.one,) * G.order for _ in range(G.order)), F)


def coboundary(G: FinGroup, mu, F=QQ) -> tuple:
    """``δμ(g,h) = μ(g) μ(h) μ(gh)^{-1}``."""
    return tuple(tuple(F(mu[g]) * F(mu[h]) / F(mu[G.mul(g, h)]) for h in range(G.order))
                 for g in range(G.order))


def klein_nontrivial_cocycle(F=QQ) -> GroupCocycle:
    """γ(a^i b^j, a^k b^l) = (-1)^{jk} on K4 (not a coboundary)."""
    if F.characteristic == 2:
        raise GroupError("-1 = 1 in characteristic 2; the sign cocycle is trivial there")
    G = klein_four()
    vals = tuple(tuple(F(-1) if (x >> 1) & (y & 1) else F.one for y in range(4))
                 for x in range(4))
    return GroupCocycle(G, vals, F)


def sign_coboundaries(G: FinGroup, F=QQ) -> list:
    """All coboundaries of normalized ``μ: G -> {±1}``."""
    others = [g for g in range(G.order) if g != G.identity]
    out = []
    for signs in itertools.product((1, -1), repeat=len(others)):
        mu = {G.identity: 1, **dict(zip(others, signs))}
        out.append(coboundary(G, mu, F))
    return out


def is_sign_coboundary(c: GroupCocycle) -> bool:
    return any(c.values == b for b in sign_coboundaries(c.group, c.field))


def group_from_spec(spec: str) -> FinGroup:
    return builtin_group(spec)
