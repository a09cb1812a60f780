"""Partial measurings and partial actions of a bialgebra on a unital algebra.

The classification functions cover the base-field target ``A = κ``, where a
measuring is the same thing as a functional ``λ(h) = h·1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import sympy

from .exactlin import QQ, vadd, vscale
from .groups import FinGroup, enumerate_subgroups
from .hopf import (FinBialgebra, UnitalAlgebra, dual_group_algebra, field_algebra,
                   group_algebra, sweedler_algebra)
from .report import Check, Report, VerificationError, sweep


@dataclass(frozen=True, eq=False)
class MeasuringData:
    """``table[i][j]`` is ``b_i · a_j`` as a coordinate vector of A."""

    hopf: FinBialgebra
    target: UnitalAlgebra
    table: tuple

    def __post_init__(self):
        H, A = self.hopf, self.target
        if H.field != A.field:
            raise ValueError("bialgebra and algebra are over different fields")
        if len(self.table) != H.dim or any(
                len(row) != A.dim or any(len(v) != A.dim for v in row) for row in self.table):
            raise ValueError("action table does not match dim H x dim A")

    @classmethod
    def from_function(cls, H, A, fn) -> "MeasuringData":
        """``fn(i, j)`` gives ``b_i · a_j``."""
        return cls(H, A, tuple(tuple(tuple(fn(i, j)) for j in range(A.dim))
                               for i in range(H.dim)))

    @property
    def field(self):
        return self.hopf.field

    def act(self, h, a) -> tuple:
        """``h · a`` for coordinate vectors ``h`` and ``a``."""
        A = self.target
        acc = A.zero()
        for i, x in enumerate(h):
            if not x:
                continue
            row = self.table[i]
            for j, y in enumerate(a):
                if y:
                    acc = vadd(acc, vscale(x * y, row[j]))
        return acc

    def act_basis(self, i: int, a) -> tuple:
        return self.act(self.hopf.basis(i), a)

    def on_one(self, i: int) -> tuple:
        return self.act_basis(i, self.target.unit)

    def is_global(self) -> bool:
        H, A = self.hopf, self.target
        return all(self.act_basis(i, A.unit) == vscale(H.counit[i], A.unit)
                   for i in range(H.dim))


def global_measuring(H: FinBialgebra, A: UnitalAlgebra) -> MeasuringData:
    """``h · a = ε(h) a``."""
    return MeasuringData.from_function(
        H, A, lambda i, j: vscale(H.counit[i], A.basis(j)))


def measuring_checks(m: MeasuringData) -> list:
    H, A = m.hopf, m.target
    n, d = H.dim, A.dim
    hn, an = H.labels, A.labels
    one = A.unit

    def pm2(i, j, k):
        lhs = m.act_basis(i, A.table[j][k])
        rhs = A.zero()
        for p, q, c in H.comult[i]:
            rhs = vadd(rhs, vscale(c, A.mul(m.act_basis(p, A.basis(j)),
                                            m.act_basis(q, A.basis(k)))))
        return lhs == rhs

    def pm3(i, k):
        lhs = m.act_basis(i, m.act_basis(k, one))
        rhs = A.zero()
        for p, q, c in H.comult[i]:
            rhs = vadd(rhs, vscale(c, A.mul(m.act_basis(p, one),
                                            m.act(H.table[q][k], one))))
        return lhs == rhs

    return [
        sweep("PM1", ((j,) for j in range(d)),
              lambda j: m.act(H.unit, A.basis(j)) == A.basis(j), lambda j: (an[j],)),
        sweep("PM2", itertools.product(range(n), range(d), range(d)), pm2,
              lambda i, j, k: (hn[i], an[j], an[k])),
        sweep("PM3", itertools.product(range(n), repeat=2), pm3,
              lambda i, k: (hn[i], hn[k])),
    ]


def check_measuring(m: MeasuringData) -> Report:
    rep = Report(f"partial measuring of {m.hopf.name} on {m.target.name}")
    rep.extend(measuring_checks(m))
    rep.payload["global"] = m.is_global()
    return rep


def partial_action_check(m: MeasuringData):
    H, A = m.hopf, m.target
    hn, an = H.labels, A.labels
    one = A.unit

    def holds(i, k, j):
        a = A.basis(j)
        lhs = m.act_basis(i, m.act_basis(k, a))
        rhs = A.zero()
        for p, q, c in H.comult[i]:
            rhs = vadd(rhs, vscale(c, A.mul(m.act_basis(p, one), m.act(H.table[q][k], a))))
        return lhs == rhs

    return sweep("partial-action", itertools.product(range(H.dim), range(H.dim), range(A.dim)),
                 holds, lambda i, k, j: (hn[i], hn[k], an[j]))


def check_partial_action(m: MeasuringData) -> Report:
    rep = Report(f"partial action of {m.hopf.name} on {m.target.name}")
    rep.extend(measuring_checks(m)[:2])
    rep.add(partial_action_check(m))
    return rep


# ---------------------------------------------------------------- functionals on κ


@dataclass(frozen=True, eq=False)
class BaseFieldFunctional:
    hopf: FinBialgebra
    lam: tuple
    label: str = ""

    @property
    def measuring(self) -> MeasuringData:
        H = self.hopf
        A = field_algebra(H.field)
        return MeasuringData(H, A, tuple(((x,),) for x in self.lam))

    def check(self) -> Report:
        return check_measuring(self.measuring)

    def values(self) -> dict:
        return dict(zip(self.hopf.labels, self.lam))


def _verified(f: BaseFieldFunctional) -> BaseFieldFunctional:
    rep = f.check()
    if not rep.passed:
        raise VerificationError(rep)
    return f


def subgroup_functional(H: FinBialgebra, L) -> BaseFieldFunctional:
    """λ_g = 1 on L, 0 elsewhere, for H = κG."""
    F = H.field
    lam = tuple(F.one if g in L.elements else F.zero for g in range(H.dim))
    return BaseFieldFunctional(H, lam, "L={" + ",".join(L.names) + "}")


def classify_group_algebra(G: FinGroup, F=QQ) -> list:
    H = group_algebra(G, F)
    return [_verified(subgroup_functional(H, L)) for L in enumerate_subgroups(G)]


def dual_subgroup_functional(H: FinBialgebra, L) -> BaseFieldFunctional:
    """λ(p_g) = 1/|L| on L, 0 elsewhere, for H = (κG)*."""
    F = H.field
    w = F.one / F(L.order)
    lam = tuple(w if g in L.elements else F.zero for g in range(H.dim))
    return BaseFieldFunctional(H, lam, "L={" + ",".join(L.names) + "}")


def classify_dual_group_algebra(G: FinGroup, F=QQ) -> list:
    H = dual_group_algebra(G, F)
    p = F.characteristic
    return [_verified(dual_subgroup_functional(H, L)) for L in enumerate_subgroups(G)
            if p == 0 or L.order % p]


def brute_force_group_algebra(G: FinGroup, F=QQ) -> list:
    """Supports of all {0,1}-valued λ with λ_e = 1 that are measurings."""
    H = group_algebra(G, F)
    others = [g for g in range(G.order) if g != G.identity]
    found = []
    for bits in itertools.product((0, 1), repeat=len(others)):
        support = {G.identity} | {g for g, b in zip(others, bits) if b}
        lam = tuple(F.one if g in support else F.zero for g in range(G.order))
        if BaseFieldFunctional(H, lam).check().passed:
            found.append(tuple(sorted(support)))
    return sorted(found, key=lambda s: (len(s), s))


def brute_force_dual_group_algebra(G: FinGroup, F=QQ) -> list:
    """Supports S ∋ e for which λ = 1/|S| on S is a measuring of (κG)*.

    PM1 forces Σ λ(p_g) = 1, and a measuring of (κG)* is constant on its
    support, so these candidates are all there is.
    """
    H = dual_group_algebra(G, F)
    p = F.characteristic
    others = [g for g in range(G.order) if g != G.identity]
    found = []
    for bits in itertools.product((0, 1), repeat=len(others)):
        support = {G.identity} | {g for g, b in zip(others, bits) if b}
        if p and len(support) % p == 0:
            continue
        w = F.one / F(len(support))
        lam = tuple(w if g in support else F.zero for g in range(G.order))
        if BaseFieldFunctional(H, lam).check().passed:
            found.append(tuple(sorted(support)))
    return sorted(found, key=lambda s: (len(s), s))


def sweedler_measuring(lx, global_: bool = False, F=QQ) -> BaseFieldFunctional:
    """λ = ε, or the partial family λ_1 = 1, λ_g = 0, λ_x = lx, λ_xg = -lx."""
    H = sweedler_algebra(F)
    if global_:
        return _verified(BaseFieldFunctional(H, tuple(H.counit), "global"))
    lx = F(lx)
    return _verified(BaseFieldFunctional(H, (F.one, F.zero, lx, -lx), f"λx={lx}"))


# ---------------------------------------------------------------- symbolic completeness


def measuring_equations(H: FinBialgebra, symbols=None):
    """Polynomial conditions on λ for a measuring of H on κ (λ(1_H) fixed by PM1).

    Over Q only. Returns ``(unknowns, equations)``; unknowns are the λ values
    on basis vectors other than the unit.
    """
    if H.field != QQ:
        raise ValueError("symbolic classification is over Q")
    unit_idx = next(i for i, x in enumerate(H.unit) if x)
    if sum(1 for x in H.unit if x) != 1:
        raise ValueError("unit must be a basis vector")
    lam = [sympy.Integer(1) if i == unit_idx else sympy.Symbol(f"l_{lab}")
           for i, lab in enumerate(H.labels)]
    unknowns = [s for s in lam if isinstance(s, sympy.Symbol)]

    def ev(vec):
        return sum((sympy.Rational(x.numerator, x.denominator) * lam[i]
                    for i, x in enumerate(vec) if x), sympy.Integer(0))

    eqs = []
    for i in range(H.dim):
        # PM2 on 1·1: λ(h) = λ(h_(1)) λ(h_(2))
        rhs = sum((sympy.Rational(c.numerator, c.denominator) * lam[p] * lam[q]
                   for p, q, c in H.comult[i]), sympy.Integer(0))
        eqs.append(sympy.expand(lam[i] - rhs))
        for k in range(H.dim):
            # PM3: λ(h) λ(k) = λ(h_(1)) λ(h_(2) k)
            rhs = sum((sympy.Rational(c.numerator, c.denominator) * lam[p] *
                       ev(H.table[q][k]) for p, q, c in H.comult[i]), sympy.Integer(0))
            eqs.append(sympy.expand(lam[i] * lam[k] - rhs))
    eqs = [e for e in set(eqs) if e != 0]
    return unknowns, eqs


def classify_symbolically(H: FinBialgebra) -> list:
    """All solution families of the measuring equations, as sympy dicts."""
    unknowns, eqs = measuring_equations(H)
    return sympy.solve(eqs, unknowns, dict=True)


def sweedler_completeness() -> Report:
    """Solve the measuring equations of H4 on Q and compare with the two families."""
    H = sweedler_algebra(QQ)
    sols = classify_symbolically(H)
    lg, lx, lxg = (sympy.Symbol(f"l_{s}") for s in ("g", "x", "xg"))
    rep = Report("measurings of H4 on Q: symbolic classification")
    kinds = []
    for sol in sols:
        g, x, xg = (sympy.simplify(sol.get(v, v)) for v in (lg, lx, lxg))
        if (g, x, xg) == (1, 0, 0):
            kinds.append("global")
        elif g == 0 and sympy.simplify(x + xg) == 0 and len((x + 0).free_symbols) == 1:
            kinds.append("lambda_g=0 family")
        else:
            kinds.append(f"unexpected ({g}, {x}, {xg})")
    ok = sorted(kinds) == ["global", "lambda_g=0 family"]
    rep.add(Check("solution-families", ok, None if ok else tuple(kinds),
                  f"{len(kinds)} families"))
    rep.payload["families"] = sorted(kinds)
    return rep
