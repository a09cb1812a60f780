"""Twisted partial actions, their cocycle families, and partial crossed products."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .convolution import (ConvMap, conv_inverse, conv_mul, conv_unit, first_L_invariance_failure,
                          first_noncommuting, from_pair_function, idempotents_e_f1_f2,
                          ideal_inverse, ideal_subspace, is_central)
from .exactlin import (QQ, LinMap, Subspace, VecSpace, bilinear, rref, solve_linear, tensor,
                       unit_vector, vadd, vscale, vsum, zeros)
from .groups import FinGroup, GroupCocycle, SubgroupRef, klein_four, quotient, subgroup
from .hopf import (FinBialgebra, UnitalAlgebra, dual_group_algebra, field_algebra,
                   group_algebra, product_algebra, sweedler_algebra, tensor_square)
from .partial import (MeasuringData, dual_subgroup_functional, global_measuring,
                      measuring_checks, subgroup_functional, sweedler_measuring)
from .report import Check, Report, VerificationError, sweep


@dataclass(frozen=True, eq=False)
class TwistedPartialActionData:
    measuring: MeasuringData
    omega: ConvMap
    omega_prime: ConvMap | None = None
    name: str = ""

    def __post_init__(self):
        sq = self.measuring.hopf.dim ** 2
        for w in (self.omega, self.omega_prime):
            if w is not None and (w.source.dim != sq or w.target.dim != self.target.dim):
                raise ValueError("cocycle must be a map H⊗H -> A")

    @property
    def hopf(self) -> FinBialgebra:
        return self.measuring.hopf

    @property
    def target(self) -> UnitalAlgebra:
        return self.measuring.target

    @property
    def symmetric(self) -> bool:
        return self.omega_prime is not None

    def with_inverse(self, omega_prime: ConvMap) -> "TwistedPartialActionData":
        return TwistedPartialActionData(self.measuring, self.omega, omega_prime, self.name)


class _Ctx:
    """Shared lookups for the axiom sweeps."""

    def __init__(self, m: MeasuringData, omega: ConvMap):
        self.m, self.H, self.A, self.w = m, m.hopf, m.target, omega
        self.n = self.H.dim
        self.one = self.A.unit
        self.ones = [m.on_one(i) for i in range(self.n)]

    def wv(self, i, vec):
        """ω(b_i, vec)."""
        return vsum((vscale(c, self.w.values[i * self.n + k]) for k, c in enumerate(vec) if c),
                    self.A.dim, self.A.field)

    def vw(self, vec, k):
        """ω(vec, b_k)."""
        return vsum((vscale(c, self.w.values[i * self.n + k]) for i, c in enumerate(vec) if c),
                    self.A.dim, self.A.field)

    def dot(self, hvec, a):
        return self.m.act(hvec, a)


def _pairs(H, i, k):
    for p, q, c in H.comult[i]:
        for r, s, d in H.comult[k]:
            yield p, q, r, s, c * d


def twisted_checks(m: MeasuringData, omega: ConvMap) -> list:
    """TPA2–TPA5 plus the derived unit-absorption identity."""
    X = _Ctx(m, omega)
    H, A, n = X.H, X.A, X.n
    hn, an = H.labels, A.labels
    w = lambda i, k: omega.values[i * n + k]
    mul = A.mul

    def tpa2(i, l, j):
        a = A.basis(j)
        lhs = rhs = A.zero()
        for p, q, r, s, c in _pairs(H, i, l):
            lhs = vadd(lhs, vscale(c, mul(m.act_basis(p, m.act_basis(r, a)), w(q, s))))
            rhs = vadd(rhs, vscale(c, mul(w(p, r), X.dot(H.table[q][s], a))))
        return lhs == rhs

    def tpa3(i, l):
        rhs = A.zero()
        for p, q, r, s, c in _pairs(H, i, l):
            rhs = vadd(rhs, vscale(c, mul(w(p, r), X.dot(H.table[q][s], X.one))))
        return w(i, l) == rhs

    def tpa4(i):
        return omega.pair(H.basis(i), H.unit) == X.ones[i] == omega.pair(H.unit, H.basis(i))

    def tpa5(i, k, l):
        lhs = rhs = A.zero()
        for p, q, c in H.comult[i]:
            for r, s, d in H.comult[k]:
                cd = c * d
                for t, u, e in H.comult[l]:
                    left = m.act_basis(p, w(r, t))
                    if any(left):
                        lhs = vadd(lhs, vscale(cd * e, mul(left, X.wv(q, H.table[s][u]))))
                rhs = vadd(rhs, vscale(cd, mul(w(p, r), X.vw(H.table[q][s], l))))
        return lhs == rhs

    def absorption(i, l):
        first = A.zero()
        for p, q, r, s, c in _pairs(H, i, l):
            first = vadd(first, vscale(c, mul(m.act_basis(p, X.ones[r]), w(q, s))))
        second = A.zero()
        for p, q, c in H.comult[i]:
            second = vadd(second, vscale(c, mul(X.ones[p], w(q, l))))
        return w(i, l) == first == second

    pairs = lambda: itertools.product(range(n), repeat=2)
    pl = lambda i, k: (hn[i], hn[k])
    return [
        sweep("TPA2", itertools.product(range(n), range(n), range(A.dim)), tpa2,
              lambda i, l, j: (hn[i], hn[l], an[j])),
        sweep("TPA3", pairs(), tpa3, pl),
        sweep("TPA4", ((i,) for i in range(n)), tpa4, lambda i: (hn[i],)),
        sweep("TPA5", itertools.product(range(n), repeat=3), tpa5,
              lambda i, k, l: (hn[i], hn[k], hn[l])),
        sweep("cocycle-absorbs-unit-action", pairs(), absorption, pl),
    ]


def symmetric_checks(m: MeasuringData, omega: ConvMap, omega_prime: ConvMap) -> list:
    H, A = m.hopf, m.target
    n = H.dim
    hn, an = H.labels, A.labels
    _, f1, f2 = idempotents_e_f1_f2(m)
    out = []
    for name, f in (("f1-central", f1), ("f2-central", f2)):
        bad = first_noncommuting(f)
        out.append(Check(name, bad is None, bad))
    g = conv_mul(f1, f2)
    out.append(Check("inverse-in-ideal", omega_prime.flat() in ideal_subspace(g)))
    ok = conv_mul(omega, omega_prime) == g == conv_mul(omega_prime, omega)
    out.append(Check("cocycle-inverse", ok))

    w = lambda i, k: omega.values[i * n + k]
    wp = lambda i, k: omega_prime.values[i * n + k]

    def with_inverse(i, k, j):
        a = A.basis(j)
        lhs = m.act_basis(i, m.act_basis(k, a))
        rhs = A.zero()
        for c, (p1, p2, p3) in H.sweedler(i, 3):
            for d, (r1, r2, r3) in H.sweedler(k, 3):
                left = w(p1, r1)
                if not any(left):
                    continue
                mid = m.act(H.table[p2][r2], a)
                rhs = vadd(rhs, vscale(c * d, A.mul(A.mul(left, mid), wp(p3, r3))))
        return lhs == rhs

    out.append(sweep("twisting-with-inverse",
                     itertools.product(range(n), range(n), range(A.dim)), with_inverse,
                     lambda i, k, j: (hn[i], hn[k], an[j])))
    return out


def check_twisted(d: TwistedPartialActionData) -> Report:
    m = d.measuring
    rep = Report(f"twisted partial action of {d.hopf.name} on {d.target.name}"
                 + (f" ({d.name})" if d.name else ""))
    rep.extend(measuring_checks(m))
    rep.extend(twisted_checks(m, d.omega))
    _, f1, f2 = idempotents_e_f1_f2(m)
    c1, c2 = is_central(f1), is_central(f2)
    rep.payload["f1_central"] = c1
    rep.payload["f2_central"] = c2
    if d.omega_prime is not None:
        rep.extend(symmetric_checks(m, d.omega, d.omega_prime))
        rep.payload["symmetric"] = True
    else:
        rep.payload["symmetric"] = False
        if not c1:
            rep.notes.append("not symmetric: f1 is not central")
        elif not c2:
            rep.notes.append("not symmetric: f2 is not central")
        elif ideal_inverse(d.omega, f1, f2) is None:
            rep.notes.append("not symmetric: no inverse of the cocycle in the ideal <f1*f2>")
        else:
            rep.notes.append("no inverse cocycle supplied; one exists in the ideal <f1*f2>")
    return rep


def require(d: TwistedPartialActionData) -> TwistedPartialActionData:
    check_twisted(d).require()
    return d


def trivial_partial_cocycle(m: MeasuringData) -> ConvMap:
    """``ω(h,k) = h·(k·1)``."""
    H, A = m.hopf, m.target
    ones = [m.on_one(i) for i in range(H.dim)]
    return from_pair_function(H, A, lambda i, k: m.act_basis(i, ones[k]))


def trivial_twisted(m: MeasuringData) -> TwistedPartialActionData:
    """The trivial cocycle, with itself as inverse when f1, f2 are central."""
    w = trivial_partial_cocycle(m)
    _, f1, f2 = idempotents_e_f1_f2(m)
    wp = w if is_central(f1) and is_central(f2) else None
    return TwistedPartialActionData(m, w, wp, "trivial cocycle")


# ---------------------------------------------------------------- group algebras


def group_cocycle_extension(G: FinGroup, L: SubgroupRef, v: GroupCocycle, F=None
                            ) -> TwistedPartialActionData:
    """κG on κ via λ^L, with ω = v on L×L and 0 elsewhere."""
    F = F or v.field
    if v.group.order != L.order:
        raise ValueError("cocycle must be defined on L")
    H = group_algebra(G, F)
    m = subgroup_functional(H, L).measuring
    pos = {g: i for i, g in enumerate(L.elements)}
    inv = v.inverse()

    def ext(c):
        return lambda g, h: (c(pos[g], pos[h]),) if g in pos and h in pos else (F.zero,)

    A = m.target
    d = TwistedPartialActionData(m, from_pair_function(H, A, ext(v)),
                                 from_pair_function(H, A, ext(inv)),
                                 "extension by zero of a cocycle on L")
    return require(d)


# ---------------------------------------------------------------- Sweedler


def sweedler_partial_cocycle(lx, c, F=QQ) -> TwistedPartialActionData:
    """The partial cocycle on H4 over the λ_g = 0 measuring with λ_x = lx.

    ω is obtained by solving TPA4 and the two unit-absorption identities as a
    linear system in the 16 values; together with ω(xg,xg) = c it has exactly
    one solution.
    """
    lam = sweedler_measuring(lx, False, F)
    H, m = lam.hopf, lam.measuring
    A = m.target
    n = H.dim
    L = [x for x in lam.lam]
    rows, rhs = [], []

    def eq(coeffs: dict, b):
        row = [F.zero] * (n * n)
        for idx, val in coeffs.items():
            row[idx] += val
        rows.append(tuple(row))
        rhs.append(F(b))

    one = 0
    for h in range(n):
        eq({h * n + one: F.one}, L[h])
        eq({one * n + h: F.one}, L[h])
    for h in range(n):
        for k in range(n):
            a: dict = {h * n + k: F.one}
            for p, q, cc in H.comult[h]:
                a[q * n + k] = a.get(q * n + k, F.zero) - cc * L[p]
            eq(a, 0)
            b: dict = {h * n + k: F.one}
            for p, q, r, s, cc in _pairs(H, h, k):
                b[q * n + s] = b.get(q * n + s, F.zero) - cc * L[p] * L[r]
            eq(b, 0)
    free_rank = len(rref(rows, n * n)[1])
    xg = H.index("xg")
    eq({xg * n + xg: F.one}, c)
    full_rank = len(rref(rows, n * n)[1])
    if full_rank != n * n or free_rank != n * n - 1:
        raise VerificationError(Report("Sweedler partial cocycle", [Check(
            "determined-by-one-free-value", False, None,
            f"rank {free_rank} without the pinned value, {full_rank} with it")]))
    sol = solve_linear(rows, rhs, F)
    if sol is None:
        raise VerificationError(Report("Sweedler partial cocycle", [Check(
            "linear-system-consistent", False)]))
    omega = ConvMap(tensor_square(H), A, tuple((x,) for x in sol))
    d = TwistedPartialActionData(m, omega, None, f"λx={F(lx)}, ω(xg,xg)={F(c)}")
    rep = check_twisted(d)
    if not rep.passed:
        raise VerificationError(rep)
    return d


# ---------------------------------------------------------------- Klein family


@dataclass(frozen=True)
class KleinFamilyPoint:
    x: object
    y: object

    def __post_init__(self):
        if 32 * self.x * self.y - 6 * (self.x + self.y) + 1 != 0:
            raise ValueError(f"({self.x}, {self.y}) is not on 32xy - 6(x+y) + 1 = 0")


def klein_cocycle_table(x, F=QQ, H=None) -> ConvMap:
    """ω on (QK4)*⊗(QK4)* with ω(p_e,p_e) = x, constant on cosets of ⟨a⟩.

    TPA4 and invariance under ⟨a⟩ leave one free value:
    block (L, L) = x, (L, bL) = (bL, L) = 1/4 - x, (bL, bL) = x - 1/4.
    """
    F_x = F(x)
    H = H or dual_group_algebra(klein_four(), F)
    A = field_algebra(F)
    q = F.one / F(4)
    in_L = lambda g: g in (0, 1)

    def val(g, h):
        if in_L(g) and in_L(h):
            return (F_x,)
        if in_L(g) or in_L(h):
            return (q - F_x,)
        return (F_x - q,)

    return from_pair_function(H, A, val)


def klein_measuring(F=QQ, H=None) -> MeasuringData:
    H = H or dual_group_algebra(klein_four(), F)
    return dual_subgroup_functional(H, subgroup(H.group, ["a"])).measuring


def klein_family(x, F=QQ):
    """Symmetric twisted partial action of (QK4)* on Q with ω(p_e,p_e) = x."""
    x = F(x)
    if 32 * x - 6 == 0:
        raise ValueError("32x = 6 has no partner y on the curve 32xy - 6(x+y) + 1 = 0")
    y = (6 * x - 1) / (32 * x - 6)
    point = KleinFamilyPoint(x, y)
    H = dual_group_algebra(klein_four(), F)
    d = TwistedPartialActionData(klein_measuring(F, H), klein_cocycle_table(x, F, H),
                                 klein_cocycle_table(y, F, H), f"Klein family x={x}")
    return require(d), point


# ---------------------------------------------------------------- quotient correspondence


@dataclass(frozen=True, eq=False)
class QuotientCocycle:
    quotient: FinGroup
    projection: tuple
    transversal: tuple
    v: ConvMap
    u: ConvMap | None
    report: Report


def _central_check(G, L, F):
    if not L.is_central():
        raise ValueError(f"{L} is not central in {G.name}")
    p = F.characteristic
    if p and L.order % p == 0:
        raise ValueError(f"char {p} divides |L| = {L.order}")


def global_cocycle_check(omega: ConvMap, G: FinGroup) -> Check:
    """Σ_s ω(p_{hs⁻¹},p_{ks⁻¹}) ω(p_g,p_s) = Σ_s ω(p_{gs⁻¹},p_{hs⁻¹}) ω(p_s,p_k)."""
    n = G.order
    A = omega.target
    w = lambda g, h: omega.values[g * n + h]
    m, inv = G.mul, G.inv

    def holds(g, h, k):
        lhs = rhs = A.zero()
        for s in range(n):
            si = inv(s)
            lhs = vadd(lhs, A.mul(w(m(h, si), m(k, si)), w(g, s)))
            rhs = vadd(rhs, A.mul(w(m(g, si), m(h, si)), w(s, k)))
        return lhs == rhs

    return sweep("global-cocycle-identity", itertools.product(range(n), repeat=3), holds,
                 lambda g, h, k: tuple(G.names[x] for x in (g, h, k)))


def partial_to_quotient(d: TwistedPartialActionData, L: SubgroupRef) -> QuotientCocycle:
    """v(p_{gL}, p_{hL}) = |L|² ω(p_g, p_h) on (κ G/L)*."""
    H = d.hopf
    G = H.group
    F = H.field
    if G is None or d.target.dim != 1:
        raise ValueError("expects (κG)* acting on κ")
    _central_check(G, L, F)
    rep = Report(f"quotient cocycle of {d.name or 'ω'} by {{{','.join(L.names)}}}")
    for label, w in (("omega", d.omega), ("omega'", d.omega_prime)):
        if w is None:
            continue
        bad = first_L_invariance_failure(w, G, L)
        if bad is not None:
            raise ValueError(f"{label} is not L-invariant at (g,h,k,l) = {bad}")
        rep.add(Check(f"{label}-L-invariant", True))
    rep.add(global_cocycle_check(d.omega, G))
    Q, proj, reps = quotient(G, L)
    K = dual_group_algebra(Q, F)
    A = d.target
    s2 = F(L.order) ** 2
    lift = lambda w: from_pair_function(
        K, A, lambda q, r: vscale(s2, w.values[reps[q] * G.order + reps[r]]))
    v = lift(d.omega)
    u = lift(d.omega_prime) if d.omega_prime is not None else None
    glob = TwistedPartialActionData(global_measuring(K, A), v, u, "quotient cocycle")
    gchecks = Report("")
    gchecks.extend(twisted_checks(glob.measuring, v))
    rep.add(Check("v-normalized", gchecks.get("TPA4").passed))
    rep.add(Check("v-cocycle", gchecks.get("TPA5").passed, gchecks.get("TPA5").counterexample))
    vinv = conv_inverse(v)
    rep.add(Check("v-invertible", vinv is not None))
    if u is not None:
        rep.add(Check("u-is-inverse-of-v", vinv is not None and vinv == u))
    rep.payload["v"] = {f"({K.labels[q]},{K.labels[r]})": v.values[q * Q.order + r][0]
                        for q in range(Q.order) for r in range(Q.order)}
    return QuotientCocycle(Q, proj, reps, v, u, rep)


def quotient_to_partial(G: FinGroup, L: SubgroupRef, v: ConvMap, u: ConvMap | None = None,
                        F=QQ) -> TwistedPartialActionData:
    """ω(p_g, p_h) = v(p_{gL}, p_{hL}) / |L|², and ω′ likewise from v⁻¹."""
    _central_check(G, L, F)
    Q, proj, _ = quotient(G, L)
    if u is None:
        u = conv_inverse(v)
        if u is None:
            raise ValueError("v is not convolution invertible")
    H = dual_group_algebra(G, F)
    m = dual_subgroup_functional(H, L).measuring
    s2 = F(L.order) ** 2
    down = lambda w: from_pair_function(
        H, m.target, lambda g, h: vscale(F.one / s2, w.values[proj[g] * Q.order + proj[h]]))
    return require(TwistedPartialActionData(m, down(v), down(u), "from a quotient cocycle"))


# ---------------------------------------------------------------- crossed products


@dataclass(frozen=True, eq=False)
class CrossedProduct:
    data: TwistedPartialActionData
    space: Subspace  # inside A⊗H, index a*dim H + h
    algebra: UnitalAlgebra  # structure constants in the row-reduced basis of ``space``
    report: Report
    _full: tuple

    @property
    def dim(self) -> int:
        return self.space.dim

    def mul_full(self, x, y) -> tuple:
        return bilinear(self._full, x, y, len(x), self.data.target.field)

    def element(self, a, h) -> tuple:
        """``a # h = a(h_(1)·1) ⊗ h_(2)`` in A⊗H coordinates."""
        d = self.data
        H, A = d.hopf, d.target
        out = zeros(A.dim * H.dim, A.field)
        for i, x in enumerate(h):
            if not x:
                continue
            for p, q, c in H.comult[i]:
                av = A.mul(a, d.measuring.on_one(p))
                out = vadd(out, vscale(x * c, tensor(av, H.basis(q))))
        return out


def crossed_product_table(d: TwistedPartialActionData) -> tuple:
    """Structure constants of (a⊗h)(b⊗k) = a(h_(1)·b) ω(h_(2),k_(1)) ⊗ h_(3)k_(2)."""
    H, A, m, w = d.hopf, d.target, d.measuring, d.omega
    n, da = H.dim, A.dim
    N = n * da
    F = A.field
    table = []
    for ai in range(da):
        for hi in range(n):
            row = []
            for bi in range(da):
                b = A.basis(bi)
                for ki in range(n):
                    acc = zeros(N, F)
                    for c, (h1, h2, h3) in H.sweedler(hi, 3):
                        left = A.mul(A.basis(ai), m.act_basis(h1, b))
                        if not any(left):
                            continue
                        for k1, k2, e in H.comult[ki]:
                            coeff = A.mul(left, w.values[h2 * n + k1])
                            if any(coeff):
                                acc = vadd(acc, vscale(c * e, tensor(coeff, H.table[h3][k2])))
                    row.append(acc)
            table.append(tuple(row))
    return tuple(table)


def build_crossed_product(d: TwistedPartialActionData, verify_axioms: bool = True
                          ) -> CrossedProduct:
    H, A = d.hopf, d.target
    F = A.field
    N = A.dim * H.dim
    if verify_axioms:
        pre = Report("")
        pre.extend(measuring_checks(d.measuring))
        pre.extend(twisted_checks(d.measuring, d.omega))
        pre.require()
    full = crossed_product_table(d)
    mul = lambda x, y: bilinear(full, x, y, N, F)
    gens = []
    for j in range(A.dim):
        for i in range(H.dim):
            g = zeros(N, F)
            for p, q, c in H.comult[i]:
                av = A.mul(A.basis(j), d.measuring.on_one(p))
                g = vadd(g, vscale(c, tensor(av, H.basis(q))))
            gens.append(g)
    S = Subspace.span(N, gens, F)
    B = S.basis
    k = len(B)
    rep = Report(f"partial crossed product for {d.name or 'twisted partial action'}")
    prods = [[mul(B[i], B[j]) for j in range(k)] for i in range(k)]
    rep.add(sweep("crossed-product-closed", itertools.product(range(k), repeat=2),
                  lambda i, j: prods[i][j] in S, lambda i, j: (f"v{i}", f"v{j}")))
    one = tensor(A.unit, H.unit)
    rep.add(Check("unit-in-span", one in S))
    if not rep.passed:
        raise VerificationError(rep)
    table = tuple(tuple(S.coordinates(prods[i][j]) for j in range(k)) for i in range(k))
    labels = tuple(f"v{i}" for i in range(k))
    alg = UnitalAlgebra(labels, table, S.coordinates(one), F, f"{A.name}#{H.name}")
    rep.extend(alg.checks())
    rep.payload["dim"] = k
    if not rep.passed:
        raise VerificationError(rep)
    return CrossedProduct(d, S, alg, rep, full)


def twisted_group_ring(L: FinGroup, v: GroupCocycle) -> UnitalAlgebra:
    """u_l u_m = v(l, m) u_{lm}."""
    F = v.field
    n = L.order
    table = tuple(tuple(vscale(v(l, m), unit_vector(n, L.mul(l, m), F)) for m in range(n))
                  for l in range(n))
    return UnitalAlgebra(tuple(f"u_{x}" for x in L.names), table,
                         unit_vector(n, L.identity, F), F, f"twisted {F.name}{L.name}")


def twisted_dual_group_ring(Q: FinGroup, v: ConvMap) -> UnitalAlgebra:
    """(κQ)* with p_q • p_r = Σ_s v(p_{qs⁻¹}, p_{rs⁻¹}) p_s."""
    A = v.target
    F = A.field
    n = Q.order
    val = lambda q, r: v.values[q * n + r][0]
    table = tuple(tuple(
        tuple(val(Q.mul(q, Q.inv(s)), Q.mul(r, Q.inv(s))) for s in range(n))
        for r in range(n)) for q in range(n))
    return UnitalAlgebra(tuple(f"p_{x}" for x in Q.names), table, (F.one,) * n, F,
                         f"twisted ({F.name}{Q.name})*")


@dataclass(frozen=True, eq=False)
class IsoCertificate:
    source: UnitalAlgebra
    crossed: CrossedProduct
    images: tuple  # images[i] = image of source basis i, in A⊗H coordinates
    report: Report


def _certify_iso(R: UnitalAlgebra, cp: CrossedProduct, images, title) -> IsoCertificate:
    rep = Report(title)
    S = cp.space
    n = R.dim
    rep.add(sweep("image-in-crossed-product", ((i,) for i in range(n)),
                  lambda i: images[i] in S, lambda i: (R.labels[i],)))
    span = Subspace.span(S.ambient_dim, images, R.field)
    rep.add(Check("bijective", span.dim == n == S.dim,
                  detail=f"rank {span.dim}, source dim {n}, target dim {S.dim}"))
    img = lambda vec: vsum((vscale(c, images[i]) for i, c in enumerate(vec) if c),
                           S.ambient_dim, R.field)
    rep.add(sweep("multiplicative", itertools.product(range(n), repeat=2),
                  lambda i, j: img(R.table[i][j]) == cp.mul_full(images[i], images[j]),
                  lambda i, j: (R.labels[i], R.labels[j])))
    rep.add(Check("unital", img(R.unit) == tensor(cp.data.target.unit, cp.data.hopf.unit)))
    rep.payload["dim"] = n
    return IsoCertificate(R, cp, tuple(images), rep)


def underline_algebra_iso_group(G: FinGroup, L: SubgroupRef, v: GroupCocycle
                                ) -> IsoCertificate:
    """Twisted group ring of L ≅ crossed product κ#κG for the extended cocycle."""
    d = group_cocycle_extension(G, L, v)
    cp = build_crossed_product(d)
    R = twisted_group_ring(L.as_group(), v)
    N = G.order
    images = [unit_vector(N, g, v.field) for g in L.elements]
    return _certify_iso(R, cp, images, f"twisted group ring of L ≅ crossed product over "
                                       f"{d.hopf.name}")


def underline_algebra_iso_dual(d: TwistedPartialActionData, L: SubgroupRef
                               ) -> IsoCertificate:
    """(κ G/L)* twisted by v ≅ crossed product, via p_{tL} ↦ Σ_{x∈L} p_{tx}."""
    qc = partial_to_quotient(d, L)
    qc.report.require()
    G = d.hopf.group
    F = d.hopf.field
    R = twisted_dual_group_ring(qc.quotient, qc.v)
    cp = build_crossed_product(d)
    images = []
    for t in qc.transversal:
        vec = [F.zero] * G.order
        for x in L.elements:
            vec[G.mul(t, x)] += F.one
        images.append(tuple(vec))
    return _certify_iso(R, cp, images, "twisted dual of G/L ≅ crossed product over "
                                       f"{d.hopf.name}")


# ---------------------------------------------------------------- global twisted actions


@dataclass(frozen=True, eq=False)
class GlobalTwistedAction:
    """A twisted H-module algebra B: ``table[i][j] = b_i ▷ c_j``, cocycle u, inverse u⁻¹."""

    hopf: FinBialgebra
    algebra: UnitalAlgebra
    table: tuple
    u: ConvMap
    u_inv: ConvMap

    def act(self, h, b) -> tuple:
        B = self.algebra
        acc = B.zero()
        for i, x in enumerate(h):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    acc = vadd(acc, vscale(x * y, self.table[i][j]))
        return acc

    def act_basis(self, i, b) -> tuple:
        return self.act(self.hopf.basis(i), b)

    @property
    def measuring(self) -> MeasuringData:
        return MeasuringData(self.hopf, self.algebra, self.table)


def global_twisted_checks(g: GlobalTwistedAction, generic: bool = True) -> list:
    H, B = g.hopf, g.algebra
    n, d = H.dim, B.dim
    hn, bn = H.labels, B.labels
    u = lambda i, k: g.u.values[i * n + k]
    ui = lambda i, k: g.u_inv.values[i * n + k]
    uv = lambda i, vec: vsum((vscale(c, u(i, k)) for k, c in enumerate(vec) if c), d, B.field)
    vu = lambda vec, k: vsum((vscale(c, u(i, k)) for i, c in enumerate(vec) if c), d, B.field)
    mul = B.mul

    def measuring(i, j, k):
        rhs = B.zero()
        for p, q, c in H.comult[i]:
            rhs = vadd(rhs, vscale(c, mul(g.act_basis(p, B.basis(j)),
                                          g.act_basis(q, B.basis(k)))))
        return g.act_basis(i, B.table[j][k]) == rhs

    def composition(i, k, j):
        b = B.basis(j)
        lhs = g.act_basis(i, g.act_basis(k, b))
        rhs = B.zero()
        for c, (p1, p2, p3) in H.sweedler(i, 3):
            for e, (r1, r2, r3) in H.sweedler(k, 3):
                left = u(p1, r1)
                if any(left):
                    mid = g.act(H.table[p2][r2], b)
                    rhs = vadd(rhs, vscale(c * e, mul(mul(left, mid), ui(p3, r3))))
        return lhs == rhs

    def cocycle(i, k, l):
        lhs = rhs = B.zero()
        for p, q, c in H.comult[i]:
            for r, s, e in H.comult[k]:
                for t, w, f in H.comult[l]:
                    left = g.act_basis(p, u(r, t))
                    if any(left):
                        lhs = vadd(lhs, vscale(c * e * f, mul(left, uv(q, H.table[s][w]))))
                rhs = vadd(rhs, vscale(c * e, mul(u(p, r), vu(H.table[q][s], l))))
        return lhs == rhs

    def normalized(i):
        eps = vscale(H.counit[i], B.unit)
        return g.u.pair(H.basis(i), H.unit) == eps == g.u.pair(H.unit, H.basis(i))

    unit = conv_unit(g.u.source, B)
    return [
        sweep("measuring", itertools.product(range(n), range(d), range(d)), measuring,
              lambda i, j, k: (hn[i], bn[j], bn[k])),
        sweep("unit-acts-trivially", ((j,) for j in range(d)),
              lambda j: g.act(H.unit, B.basis(j)) == B.basis(j), lambda j: (bn[j],)),
        sweep("action-on-unit", ((i,) for i in range(n)),
              lambda i: g.act_basis(i, B.unit) == vscale(H.counit[i], B.unit),
              lambda i: (hn[i],)),
        sweep("composition-law", itertools.product(range(n), range(n), range(d)),
              composition, lambda i, k, j: (hn[i], hn[k], bn[j])),
        sweep("cocycle-law", itertools.product(range(n), repeat=3), cocycle,
              lambda i, k, l: (hn[i], hn[k], hn[l])),
        sweep("u-normalized", ((i,) for i in range(n)), normalized, lambda i: (hn[i],)),
        Check("u-invertible", conv_mul(g.u, g.u_inv) == unit == conv_mul(g.u_inv, g.u)),
    ]


def check_global_twisted(g: GlobalTwistedAction) -> Report:
    rep = Report(f"twisted action of {g.hopf.name} on {g.algebra.name}")
    rep.extend(global_twisted_checks(g))
    return rep


@dataclass(frozen=True, eq=False)
class RestrictedAction:
    data: TwistedPartialActionData
    inclusion: LinMap  # A = eB -> B
    space: Subspace
    report: Report


def restrict_global_twisted(g: GlobalTwistedAction, e) -> RestrictedAction:
    """Restrict to the unital ideal A = eB for a central idempotent e of B.

    ``h·a = e(h▷a)``, ``ω(h,k) = (h_(1)·e) u(h_(2),k_(1)) (h_(3)k_(2)·e)`` and
    ``ω′(h,k) = (h_(1)k_(1)·e) u⁻¹(h_(2),k_(2)) (h_(3)·e)``.
    """
    H, B = g.hopf, g.algebra
    F = B.field
    n = H.dim
    e = tuple(e)
    pre = check_global_twisted(g)
    if B.mul(e, e) != e:
        raise ValueError("1_A is not idempotent")
    if any(B.mul(e, B.basis(j)) != B.mul(B.basis(j), e) for j in range(B.dim)):
        raise ValueError("1_A is not central")
    pre.require()
    S = Subspace.span(B.dim, [B.mul(e, B.basis(j)) for j in range(B.dim)], F)
    k = S.dim
    coords = S.coordinates
    basis = S.basis
    table = tuple(tuple(coords(B.mul(basis[i], basis[j])) for j in range(k)) for i in range(k))
    A = UnitalAlgebra(tuple(f"a{i}" for i in range(k)), table, coords(e), F,
                      f"e{B.name}")
    dot = lambda hvec, b: B.mul(e, g.act(hvec, b))  # in B coordinates
    act_table = tuple(tuple(coords(dot(H.basis(i), basis[j])) for j in range(k))
                      for i in range(n))
    m = MeasuringData(H, A, act_table)
    ones = [dot(H.basis(i), e) for i in range(n)]
    u = lambda i, j: g.u.values[i * n + j]
    ui = lambda i, j: g.u_inv.values[i * n + j]

    def omega(i, kk):
        acc = B.zero()
        for c, (h1, h2, h3) in H.sweedler(i, 3):
            for k1, k2, d in H.comult[kk]:
                t = B.mul(B.mul(ones[h1], u(h2, k1)), dot(H.table[h3][k2], e))
                acc = vadd(acc, vscale(c * d, t))
        return coords(acc)

    def omega_p(i, kk):
        acc = B.zero()
        for c, (h1, h2, h3) in H.sweedler(i, 3):
            for k1, k2, d in H.comult[kk]:
                t = B.mul(B.mul(dot(H.table[h1][k1], e), ui(h2, k2)), ones[h3])
                acc = vadd(acc, vscale(c * d, t))
        return coords(acc)

    w = from_pair_function(H, A, omega)
    _, f1, f2 = idempotents_e_f1_f2(m)
    wp = from_pair_function(H, A, omega_p) if is_central(f1) and is_central(f2) else None
    d = TwistedPartialActionData(m, w, wp, "restriction to eB")
    rep = check_twisted(d)
    incl = LinMap.from_columns(VecSpace(A.labels), VecSpace(B.labels), list(basis), F)
    return RestrictedAction(d, incl, S, rep)


def swap_algebra_example(F=QQ) -> GlobalTwistedAction:
    """Q×Q with K4 acting by a ↦ swap, b ↦ identity, trivial cocycle."""
    G = klein_four()
    H = group_algebra(G, F)
    B = product_algebra(2, F)
    swap = lambda g: g & 1  # exponent of a
    table = tuple(tuple(unit_vector(2, j ^ swap(g), F) for j in range(2)) for g in range(4))
    u = from_pair_function(H, B, lambda i, k: B.unit)
    return GlobalTwistedAction(H, B, table, u, u)
