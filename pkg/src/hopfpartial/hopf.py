"""Finite-dimensional algebras and bialgebras given by structure constants.

A bialgebra stores its multiplication as ``table[i][j] -> coordinate vector``
and its comultiplication sparsely: ``comult[i]`` is a tuple of ``(j, k, c)``
triples meaning ``Δ(b_i) = Σ c b_j ⊗ b_k``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .exactlin import (QQ, LinMap, VecSpace, bilinear, tensor_space, unit_vector, vadd,
                       vscale, vsub, vsum, zeros)
from .groups import FinGroup, builtin_group
from .report import Check, Report, VerificationError, sweep


@dataclass(frozen=True, eq=False)
class UnitalAlgebra:
    labels: tuple
    table: tuple
    unit: tuple
    field: object = QQ
    name: str = "A"

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def space(self) -> VecSpace:
        return VecSpace(self.labels)

    def basis(self, i: int) -> tuple:
        return unit_vector(self.dim, i, self.field)

    def zero(self) -> tuple:
        return zeros(self.dim, self.field)

    def mul(self, u, v) -> tuple:
        return bilinear(self.table, u, v, self.dim, self.field)

    def prod(self, *vs) -> tuple:
        out = vs[0]
        for v in vs[1:]:
            out = self.mul(out, v)
        return out

    def checks(self) -> list:
        n, b = self.dim, self.basis
        names = self.labels
        return [
            sweep("associativity", itertools.product(range(n), repeat=3),
                  lambda i, j, k: self.mul(self.table[i][j], b(k)) ==
                  self.mul(b(i), self.table[j][k]),
                  lambda i, j, k: (names[i], names[j], names[k])),
            sweep("unit", ((i,) for i in range(n)),
                  lambda i: self.mul(self.unit, b(i)) == b(i) == self.mul(b(i), self.unit),
                  lambda i: (names[i],)),
        ]

    def is_commutative(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.dim) for j in range(i))


def field_algebra(F=QQ) -> UnitalAlgebra:
    """The ground field as a 1-dimensional algebra."""
    return UnitalAlgebra(("1",), (((F.one,),),), (F.one,), F, "k")


def product_algebra(n: int, F=QQ) -> UnitalAlgebra:
    """``F^n`` with coordinatewise product (basis of orthogonal idempotents)."""
    table = tuple(tuple(unit_vector(n, i, F) if i == j else zeros(n, F) for j in range(n))
                  for i in range(n))
    return UnitalAlgebra(tuple(f"e{i + 1}" for i in range(n)), table, (F.one,) * n, F,
                         f"k^{n}")


@dataclass(frozen=True, eq=False)
class FinBialgebra:
    labels: tuple
    table: tuple
    unit: tuple
    comult: tuple
    counit: tuple
    antipode: LinMap | None = None
    field: object = QQ
    name: str = "H"
    group: FinGroup | None = None
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def space(self) -> VecSpace:
        return VecSpace(self.labels)

    @cached_property
    def algebra(self) -> UnitalAlgebra:
        return UnitalAlgebra(self.labels, self.table, self.unit, self.field, self.name)

    def basis(self, i: int) -> tuple:
        return unit_vector(self.dim, i, self.field)

    def zero(self) -> tuple:
        return zeros(self.dim, self.field)

    def one(self) -> tuple:
        return self.unit

    def mul(self, u, v) -> tuple:
        return bilinear(self.table, u, v, self.dim, self.field)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def eps(self, v) -> object:
        return sum((a * b for a, b in zip(self.counit, v) if a and b), self.field.zero)

    def S(self, v) -> tuple:
        if self.antipode is None:
            raise ValueError(f"{self.name} has no antipode")
        return self.antipode(v)

    def comult_vec(self, v) -> dict:
        out: dict = {}
        for i, a in enumerate(v):
            if not a:
                continue
            for j, k, c in self.comult[i]:
                out[(j, k)] = out.get((j, k), self.field.zero) + a * c
        return {t: c for t, c in out.items() if c}

    def sweedler(self, i: int, legs: int) -> tuple:
        """``Δ^{(legs-1)}(b_i)`` as ``((coeff, (i_1, ..., i_legs)), ...)``.

        Expanded left to right: the last leg is split again at each step.
        """
        key = (i, legs)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if legs < 1:
            raise ValueError("need at least one leg")
        if legs == 1:
            out = ((self.field.one, (i,)),)
        else:
            acc: dict = {}
            for c, t in self.sweedler(i, legs - 1):
                for j, k, d in self.comult[t[-1]]:
                    key2 = t[:-1] + (j, k)
                    acc[key2] = acc.get(key2, self.field.zero) + c * d
            out = tuple((c, t) for t, c in sorted(acc.items()) if c)
        self._cache[key] = out
        return out

    @cached_property
    def cocommutative(self) -> bool:
        return all(sorted((j, k, c) for j, k, c in self.comult[i]) ==
                   sorted((k, j, c) for j, k, c in self.comult[i])
                   for i in range(self.dim))

    def is_commutative(self) -> bool:
        return self.algebra.is_commutative()

    def __repr__(self):
        return f"FinBialgebra({self.name}, dim={self.dim})"


def _comult_dict(H: FinBialgebra, i: int) -> dict:
    return H.comult_vec(H.basis(i))


def _tensor_vec_mul(H, x: dict, y: dict) -> dict:
    """Product in H⊗H of two sparse tensors."""
    out: dict = {}
    for (a, b), c in x.items():
        for (p, q), d in y.items():
            left = H.table[a][p]
            right = H.table[b][q]
            for s, ls in enumerate(left):
                if not ls:
                    continue
                for t, rt in enumerate(right):
                    if rt:
                        out[(s, t)] = out.get((s, t), H.field.zero) + c * d * ls * rt
    return {k: v for k, v in out.items() if v}


def hopf_checks(H: FinBialgebra) -> list:
    """Exhaustive bialgebra (and antipode, if present) axiom sweep."""
    n, F, names = H.dim, H.field, H.labels
    rng = range(n)
    checks = H.algebra.checks()

    def delta_left(i):   # (Δ⊗id)Δ
        out: dict = {}
        for j, k, c in H.comult[i]:
            for a, b, d in H.comult[j]:
                out[(a, b, k)] = out.get((a, b, k), F.zero) + c * d
        return {t: v for t, v in out.items() if v}

    def delta_right(i):  # (id⊗Δ)Δ
        out: dict = {}
        for j, k, c in H.comult[i]:
            for a, b, d in H.comult[k]:
                out[(j, a, b)] = out.get((j, a, b), F.zero) + c * d
        return {t: v for t, v in out.items() if v}

    checks.append(_coassociativity(n, names, delta_left, delta_right))

    def counit_law(i):
        left = vsum((vscale(c * H.counit[j], H.basis(k)) for j, k, c in H.comult[i]), n, F)
        right = vsum((vscale(c * H.counit[k], H.basis(j)) for j, k, c in H.comult[i]), n, F)
        return left == H.basis(i) == right

    checks.append(sweep("counit", ((i,) for i in rng), counit_law, lambda i: (names[i],)))
    checks.append(sweep(
        "comult-multiplicative", itertools.product(rng, repeat=2),
        lambda i, j: H.comult_vec(H.table[i][j]) ==
        _tensor_vec_mul(H, _comult_dict(H, i), _comult_dict(H, j)),
        lambda i, j: (names[i], names[j])))
    checks.append(Check("comult-unit", H.comult_vec(H.unit) == _unit_tensor(H)))
    checks.append(sweep(
        "counit-multiplicative", itertools.product(rng, repeat=2),
        lambda i, j: H.eps(H.table[i][j]) == H.counit[i] * H.counit[j],
        lambda i, j: (names[i], names[j])))
    checks.append(Check("counit-unit", H.eps(H.unit) == 1))
    if H.antipode is not None:
        def antipode_law(i):
            unit_eps = vscale(H.counit[i], H.unit)
            left = vsum((vscale(c, H.mul(H.S(H.basis(j)), H.basis(k)))
                         for j, k, c in H.comult[i]), n, F)
            right = vsum((vscale(c, H.mul(H.basis(j), H.S(H.basis(k))))
                          for j, k, c in H.comult[i]), n, F)
            return left == unit_eps == right

        checks.append(sweep("antipode", ((i,) for i in rng), antipode_law,
                            lambda i: (names[i],)))
    return checks


def _coassociativity(n, names, left, right) -> Check:
    for i in range(n):
        a, b = left(i), right(i)
        if a != b:
            t = min(k for k in set(a) | set(b) if a.get(k) != b.get(k))
            return Check("coassociativity", False, (names[i],),
                         "iterated coproducts differ at " + "⊗".join(names[x] for x in t), i + 1)
    return Check("coassociativity", True, None, "", n)


def _unit_tensor(H) -> dict:
    out: dict = {}
    for a, x in enumerate(H.unit):
        for b, y in enumerate(H.unit):
            if x and y:
                out[(a, b)] = x * y
    return out


def verify_hopf(H: FinBialgebra) -> Report:
    rep = Report(f"bialgebra axioms for {H.name}")
    rep.extend(hopf_checks(H))
    rep.payload["dim"] = H.dim
    rep.payload["cocommutative"] = H.cocommutative
    rep.payload["commutative"] = H.is_commutative()
    rep.payload["antipode"] = H.antipode is not None
    return rep


def checked(H: FinBialgebra) -> FinBialgebra:
    rep = verify_hopf(H)
    if not rep.passed:
        raise VerificationError(rep)
    return H


# ---------------------------------------------------------------- constructors


def group_algebra(G: FinGroup, F=QQ) -> FinBialgebra:
    """κG: grouplike basis, Δg = g⊗g, S(g) = g^{-1}."""
    n = G.order
    table = tuple(tuple(unit_vector(n, G.mul(g, h), F) for h in range(n)) for g in range(n))
    comult = tuple(((g, g, F.one),) for g in range(n))
    space = VecSpace(G.names)
    S = LinMap.from_columns(space, space, [unit_vector(n, G.inv(g), F) for g in range(n)], F)
    return checked(FinBialgebra(G.names, table, unit_vector(n, G.identity, F), comult,
                                (F.one,) * n, S, F, f"{F.name}{G.name}", G))


def dual_group_algebra(G: FinGroup, F=QQ) -> FinBialgebra:
    """(κG)*: p_g p_h = δ p_g, Δp_g = Σ_h p_{gh^{-1}} ⊗ p_h, S(p_g) = p_{g^{-1}}."""
    n = G.order
    z = zeros(n, F)
    table = tuple(tuple(unit_vector(n, g, F) if g == h else z for h in range(n))
                  for g in range(n))
    comult = tuple(tuple((G.mul(g, G.inv(h)), h, F.one) for h in range(n)) for g in range(n))
    labels = tuple(f"p_{x}" for x in G.names)
    space = VecSpace(labels)
    S = LinMap.from_columns(space, space, [unit_vector(n, G.inv(g), F) for g in range(n)], F)
    return checked(FinBialgebra(labels, table, (F.one,) * n, comult,
                                unit_vector(n, G.identity, F), S, F,
                                f"({F.name}{G.name})*", G))


def sweedler_algebra(F=QQ) -> FinBialgebra:
    """H4 with basis 1, g, x, xg: g² = 1, x² = 0, gx = -xg, Δx = x⊗1 + g⊗x."""
    if F.characteristic == 2:
        raise ValueError("the Sweedler algebra needs characteristic != 2")
    one, z = F.one, F.zero
    e = [unit_vector(4, i, F) for i in range(4)]
    Z = zeros(4, F)
    neg = lambda v: vscale(F(-1), v)
    # rows: left factor 1, g, x, xg
    table = (
        (e[0], e[1], e[2], e[3]),
        (e[1], e[0], neg(e[3]), neg(e[2])),
        (e[2], e[3], Z, Z),
        (e[3], e[2], Z, Z),
    )
    comult = (
        ((0, 0, one),),
        ((1, 1, one),),
        ((2, 0, one), (1, 2, one)),
        ((3, 1, one), (0, 3, one)),
    )
    labels = ("1", "g", "x", "xg")
    space = VecSpace(labels)
    S = LinMap.from_columns(space, space, [e[0], e[1], e[3], neg(e[2])], F)
    return checked(FinBialgebra(labels, table, e[0], comult, (one, one, z, z), S, F,
                                "H4"))


def dualize(H: FinBialgebra, name: str | None = None) -> FinBialgebra:
    """Transpose all structure maps; basis ``f_i`` dual to ``b_i``."""
    if H.antipode is None:
        raise ValueError("dualize expects a Hopf algebra")
    n, F = H.dim, H.field
    delta = [[F.zero] * (n * n) for _ in range(n)]
    for i in range(n):
        for j, k, c in H.comult[i]:
            delta[i][j * n + k] += c
    # (f_j f_k)(b_i) = coefficient of b_j⊗b_k in Δ(b_i)
    table = tuple(tuple(tuple(delta[i][j * n + k] for i in range(n)) for k in range(n))
                  for j in range(n))
    # Δ*(f_i) = Σ_{j,k} (coefficient of b_i in b_j b_k) f_j⊗f_k
    comult = tuple(tuple((j, k, H.table[j][k][i]) for j in range(n) for k in range(n)
                         if H.table[j][k][i]) for i in range(n))
    labels = tuple(f"{x}*" for x in H.labels)
    space = VecSpace(labels)
    St = LinMap(space, space, tuple(tuple(H.antipode.matrix[j][i] for j in range(n))
                                    for i in range(n)), F)
    return checked(FinBialgebra(labels, table, tuple(H.counit), comult, tuple(H.unit), St,
                                F, name or f"{H.name}*"))


def tensor_product(H: FinBialgebra, K: FinBialgebra) -> FinBialgebra:
    """H⊗K with componentwise structure; labels ``(h⊗k)``.

    Not re-verified: a tensor product of bialgebras is one.
    """
    F = H.field
    n, m = H.dim, K.dim
    N = n * m
    table = tuple(
        tuple(tuple(a * b for a in H.table[i][p] for b in K.table[j][q])
              for p in range(n) for q in range(m))
        for i in range(n) for j in range(m))
    comult = tuple(
        tuple(((a * m + c), (b * m + d), x * y)
              for a, b, x in H.comult[i] for c, d, y in K.comult[j])
        for i in range(n) for j in range(m))
    counit = tuple(a * b for a in H.counit for b in K.counit)
    unit = tuple(a * b for a in H.unit for b in K.unit)
    space = tensor_space(H.space, K.space)
    S = None
    if H.antipode is not None and K.antipode is not None:
        cols = [tuple(a * b for a in H.antipode.column(i) for b in K.antipode.column(j))
                for i in range(n) for j in range(m)]
        S = LinMap.from_columns(space, space, cols, F)
    return FinBialgebra(space.labels, table, unit, comult, counit, S, F,
                        f"{H.name}⊗{K.name}")


def tensor_square(H: FinBialgebra) -> FinBialgebra:
    key = "__square__"
    sq = H._cache.get(key)
    if sq is None:
        sq = tensor_product(H, H)
        H._cache[key] = sq
    return sq


def iterated_comult(H: FinBialgebra, element, k: int) -> dict:
    """``Δ^{(k-1)}(element)`` as a dict ``{(i_1..i_k): coeff}``."""
    out: dict = {}
    for i, a in enumerate(element):
        if not a:
            continue
        for c, t in H.sweedler(i, k):
            out[t] = out.get(t, H.field.zero) + a * c
    return {t: c for t, c in out.items() if c}


def iterated_comult_right(H: FinBialgebra, element, k: int) -> dict:
    """Same as :func:`iterated_comult` but splitting the first leg each time."""
    cur = {(i,): a for i, a in enumerate(element) if a}
    for _ in range(k - 1):
        nxt: dict = {}
        for t, c in cur.items():
            for j, l, d in H.comult[t[0]]:
                key = (j, l) + t[1:]
                nxt[key] = nxt.get(key, H.field.zero) + c * d
        cur = {t: c for t, c in nxt.items() if c}
    return cur


def hopf_from_spec(spec: str, F=QQ, groups: dict | None = None) -> FinBialgebra:
    """``groupalg:<G>``, ``dualgroupalg:<G>`` or ``sweedler``.

    ``<G>`` is a builtin group name, or a key of ``groups``.
    """
    spec = spec.strip()
    if spec in ("sweedler", "H4"):
        return sweedler_algebra(F)
    kind, _, gname = spec.partition(":")
    if not gname:
        raise ValueError(f"unknown Hopf algebra {spec!r}")
    G = (groups or {}).get(gname) or builtin_group(gname)
    if kind == "groupalg":
        return group_algebra(G, F)
    if kind == "dualgroupalg":
        return dual_group_algebra(G, F)
    raise ValueError(f"unknown Hopf algebra {spec!r}")
