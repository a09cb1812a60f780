"""Globalization of symmetric twisted partial actions through an auxiliary map w̃.

Given w̃: H⊗H -> A, the ambient algebra is Hom(H, A) with convolution, the
partial data embeds through φ(a)(h) = h·a, and the global structure is

    (h▷θ)(k)     = w̃(k_(1),h_(1)) θ(k_(2)h_(2)) w̃⁻¹(k_(3),h_(3))
    u(h,k)(l)    = w̃(l_(1),h_(1)) w̃(l_(2)h_(2),k_(1)) w̃⁻¹(l_(3),h_(3)k_(2))
    u⁻¹(h,k)(l)  = w̃(l_(1),h_(1)k_(1)) w̃⁻¹(l_(2)h_(2),k_(2)) w̃⁻¹(l_(3),h_(3))

B is the subalgebra generated by all h▷φ(a) and u^{±1}(h,k).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .convolution import (ConvMap, conv_inverse, conv_mul, conv_unit, convolution_algebra,
                          from_pair_function, idempotents_e_f1_f2)
from .exactlin import (LinMap, Subspace, VecSpace, solve_linear, subspace_closure, vadd,
                       vscale, vsum)
from .groups import klein_four, klein_nontrivial_cocycle, subgroup, trivial_cocycle, whole_group
from .hopf import FinBialgebra, UnitalAlgebra
from .report import Check, Report, VerificationError, sweep
from .twisted import (GlobalTwistedAction, TwistedPartialActionData, global_twisted_checks,
                      group_cocycle_extension, klein_family)


@dataclass(frozen=True, eq=False)
class WTilde:
    map: ConvMap
    inverse: ConvMap


# ---------------------------------------------------------------- w̃ identities


def _from_units(d: TwistedPartialActionData, w: ConvMap) -> ConvMap:
    """``(h_(1)·1)(h_(2)k_(1)·1) w(h_(3),k_(2))``."""
    H, A, m = d.hopf, d.target, d.measuring
    n = H.dim
    ones = [m.on_one(i) for i in range(n)]

    def val(i, k):
        acc = A.zero()
        for c, (h1, h2, h3) in H.sweedler(i, 3):
            for k1, k2, e in H.comult[k]:
                left = A.mul(ones[h1], m.act(H.table[h2][k1], A.unit))
                if any(left):
                    acc = vadd(acc, vscale(c * e, A.mul(left, w.values[h3 * n + k2])))
        return acc

    return from_pair_function(H, A, val)


def wtilde_checks(d: TwistedPartialActionData, w: ConvMap, w_inv: ConvMap | None) -> list:
    H, A, m = d.hopf, d.target, d.measuring
    n = H.dim
    hn = H.labels
    out = []
    out.append(sweep(
        "wtilde-normalized", ((i,) for i in range(n)),
        lambda i: w.pair(H.unit, H.basis(i)) == vscale(H.counit[i], A.unit)
        == w.pair(H.basis(i), H.unit), lambda i: (hn[i],)))
    unit = conv_unit(w.source, A)
    out.append(Check("wtilde-invertible", w_inv is not None and
                     conv_mul(w, w_inv) == unit == conv_mul(w_inv, w)))
    ones = [m.on_one(i) for i in range(n)]
    wv = lambda i, vec: vsum((vscale(c, w.values[i * n + k]) for k, c in enumerate(vec) if c),
                             A.dim, A.field)
    vw = lambda vec, k: vsum((vscale(c, w.values[i * n + k]) for i, c in enumerate(vec) if c),
                             A.dim, A.field)

    def cocycle(i, k, l):
        lhs = rhs = A.zero()
        for p, q, c in H.comult[i]:
            for r, s, e in H.comult[k]:
                for t, u, f in H.comult[l]:
                    left = m.act_basis(p, w.values[r * n + t])
                    if any(left):
                        lhs = vadd(lhs, vscale(c * e * f, A.mul(left, wv(q, H.table[s][u]))))
        for c, (h1, h2, h3) in H.sweedler(i, 3):
            for k1, k2, e in H.comult[k]:
                left = A.mul(ones[h1], w.values[h2 * n + k1])
                if any(left):
                    rhs = vadd(rhs, vscale(c * e, A.mul(left, vw(H.table[h3][k2], l))))
        return lhs == rhs

    out.append(sweep("wtilde-cocycle", itertools.product(range(n), repeat=3), cocycle,
                     lambda i, k, l: (hn[i], hn[k], hn[l])))
    out.append(_table_check("wtilde-recovers-omega", d.omega, _from_units(d, w)))
    _, f1, f2 = idempotents_e_f1_f2(m)
    g = conv_mul(f1, f2)
    out.append(Check("omega-is-f1f2-times-wtilde", conv_mul(g, w) == d.omega))
    if d.omega_prime is not None:
        if w_inv is None:
            out.append(Check("wtilde-recovers-omega-inverse", False, None,
                             "w̃ has no convolution inverse"))
        else:
            out.append(_table_check("wtilde-recovers-omega-inverse", d.omega_prime,
                                    _from_units(d, w_inv)))
    return out


def _table_check(check_id: str, want: ConvMap, got: ConvMap) -> Check:
    H_labels = _pair_labels(want)
    for idx, (a, b) in enumerate(zip(want.values, got.values)):
        if a != b:
            return Check(check_id, False, H_labels[idx], f"expected {_fmt(a)}, got {_fmt(b)}")
    return Check(check_id, True, tuples=len(want.values))


def _pair_labels(w: ConvMap) -> list:
    n = w._base_dim()
    base = w.source.labels
    # tensor square labels are "(x⊗y)"; recover the components
    return [tuple(base[i][1:-1].split("⊗")) for i in range(n * n)]


def _fmt(vec) -> str:
    return "(" + ", ".join(str(x) for x in vec) + ")"


def check_wtilde(d: TwistedPartialActionData, w: ConvMap) -> Report:
    rep = Report("auxiliary map w̃")
    w_inv = conv_inverse(w)
    rep.extend(wtilde_checks(d, w, w_inv))
    return rep


def certify_wtilde(d: TwistedPartialActionData, w: ConvMap) -> WTilde:
    w_inv = conv_inverse(w)
    if w_inv is None:
        raise VerificationError(Report("auxiliary map w̃", [Check("wtilde-invertible", False)]))
    rep = Report("auxiliary map w̃")
    rep.extend(wtilde_checks(d, w, w_inv))
    rep.require()
    return WTilde(w, w_inv)


# ---------------------------------------------------------------- the globalization


@dataclass(eq=False)
class GlobalizationResult:
    data: TwistedPartialActionData
    wtilde: WTilde
    ambient: UnitalAlgebra
    phi: LinMap
    action: tuple  # action[i][t] = b_i ▷ E_t
    u: ConvMap
    u_inv: ConvMap
    B: Subspace
    report: Report = field(default_factory=lambda: Report("globalization"))

    @property
    def hopf(self) -> FinBialgebra:
        return self.data.hopf

    def act(self, h, theta) -> tuple:
        N = self.ambient.dim
        acc = self.ambient.zero()
        for i, x in enumerate(h):
            if not x:
                continue
            for t, y in enumerate(theta):
                if y:
                    acc = vadd(acc, vscale(x * y, self.action[i][t]))
        return acc

    def ambient_action(self) -> GlobalTwistedAction:
        return GlobalTwistedAction(self.hopf, self.ambient, self.action, self.u, self.u_inv)

    def global_action(self):
        """``(B with its twisted action, φ: A -> B, φ(1))`` in coordinates of B's basis."""
        S, amb, H = self.B, self.ambient, self.hopf
        k = S.dim
        basis = S.basis
        c = S.coordinates
        table = tuple(tuple(c(amb.mul(basis[i], basis[j])) for j in range(k))
                      for i in range(k))
        B = UnitalAlgebra(tuple(f"b{i}" for i in range(k)), table, c(amb.unit), amb.field,
                          "B")
        act = tuple(tuple(c(self.act(H.basis(i), basis[j])) for j in range(k))
                    for i in range(H.dim))
        to_B = lambda w: ConvMap(w.source, B, tuple(c(v) for v in w.values))
        g = GlobalTwistedAction(H, B, act, to_B(self.u), to_B(self.u_inv))
        A = self.data.target
        cols = [c(self.phi.column(j)) for j in range(A.dim)]
        phi = LinMap.from_columns(VecSpace(A.labels), VecSpace(B.labels), cols, amb.field)
        return g, phi, phi(A.unit)


def build_globalization(d: TwistedPartialActionData, wt: WTilde | ConvMap,
                        strict: bool = True) -> GlobalizationResult:
    H, A, m = d.hopf, d.target, d.measuring
    F = A.field
    n, da = H.dim, A.dim
    if isinstance(wt, ConvMap):
        wt = certify_wtilde(d, wt)
    w, wi = wt.map, wt.inverse
    amb = convolution_algebra(H, A, f"Hom({H.name},{A.name})")
    N = amb.dim
    at = lambda theta, hvec: vsum((vscale(c, theta[l * da:(l + 1) * da])
                                   for l, c in enumerate(hvec) if c), da, F)
    wval = lambda i, k: w.values[i * n + k]
    wival = lambda i, k: wi.values[i * n + k]

    def act_basis(i, theta):
        out = []
        for k in range(n):
            acc = A.zero()
            for c, (k1, k2, k3) in H.sweedler(k, 3):
                for e, (h1, h2, h3) in H.sweedler(i, 3):
                    left = wval(k1, h1)
                    if not any(left):
                        continue
                    mid = at(theta, H.table[k2][h2])
                    if any(mid):
                        acc = vadd(acc, vscale(c * e, A.mul(A.mul(left, mid), wival(k3, h3))))
            out.extend(acc)
        return tuple(out)

    basis = [amb.basis(t) for t in range(N)]
    action = tuple(tuple(act_basis(i, basis[t]) for t in range(N)) for i in range(n))

    def u_val(i, k, inverse=False):
        out = []
        for l in range(n):
            acc = A.zero()
            for c, (l1, l2, l3) in H.sweedler(l, 3):
                for e, (h1, h2, h3) in H.sweedler(i, 3):
                    for k1, k2, f in H.comult[k]:
                        if not inverse:
                            a1 = wval(l1, h1)
                            a2 = w.pair(H.table[l2][h2], H.basis(k1))
                            a3 = wi.pair(H.basis(l3), H.table[h3][k2])
                        else:
                            a1 = w.pair(H.basis(l1), H.table[h1][k1])
                            a2 = wi.pair(H.table[l2][h2], H.basis(k2))
                            a3 = wival(l3, h3)
                        if any(a1) and any(a2) and any(a3):
                            acc = vadd(acc, vscale(c * e * f, A.mul(A.mul(a1, a2), a3)))
            out.extend(acc)
        return tuple(out)

    u = from_pair_function(H, amb, lambda i, k: u_val(i, k))
    u_inv = from_pair_function(H, amb, lambda i, k: u_val(i, k, True))
    phi_cols = [tuple(x for l in range(n) for x in m.act_basis(l, A.basis(j)))
                for j in range(da)]
    phi = LinMap.from_columns(VecSpace(A.labels), VecSpace(amb.labels), phi_cols, F)

    gens = [_act_vec(action, H.basis(i), phi_cols[j], amb)
            for i in range(n) for j in range(da)]
    gens += list(u.values) + list(u_inv.values)
    B = subspace_closure(gens, amb.table, N, F)
    res = GlobalizationResult(d, wt, amb, phi, action, u, u_inv, B)
    res.report = _globalization_report(res)
    if strict:
        res.report.require()
    return res


def _act_vec(action, h, theta, amb) -> tuple:
    acc = amb.zero()
    for i, x in enumerate(h):
        if not x:
            continue
        for t, y in enumerate(theta):
            if y:
                acc = vadd(acc, vscale(x * y, action[i][t]))
    return acc


def _globalization_report(res: GlobalizationResult) -> Report:
    d, H, A, amb = res.data, res.hopf, res.data.target, res.ambient
    m = d.measuring
    n, da = H.dim, A.dim
    hn, an = H.labels, A.labels
    S = res.B
    phi = res.phi
    w, wi = res.wtilde.map, res.wtilde.inverse
    rep = Report(f"globalization of {d.name or 'twisted partial action'}")
    rep.extend(global_twisted_checks(res.ambient_action()))

    act = lambda hvec, theta: res.act(hvec, theta)
    rep.add(Check("B-contains-unit", amb.unit in S))
    rep.add(sweep("B-closed-under-product", itertools.product(range(S.dim), repeat=2),
                  lambda i, j: amb.mul(S.basis[i], S.basis[j]) in S,
                  lambda i, j: (f"b{i}", f"b{j}")))
    rep.add(sweep("B-closed-under-action", itertools.product(range(n), range(S.dim)),
                  lambda i, j: act(H.basis(i), S.basis[j]) in S,
                  lambda i, j: (hn[i], f"b{j}")))
    rep.add(sweep("B-contains-cocycle", itertools.product(range(n), repeat=2),
                  lambda i, k: res.u.values[i * n + k] in S and res.u_inv.values[i * n + k] in S,
                  lambda i, k: (hn[i], hn[k])))

    ph = lambda a: phi(a)
    pa = [phi.column(j) for j in range(da)]
    rep.add(Check("phi-injective", phi.is_injective()))
    rep.add(sweep("phi-multiplicative", itertools.product(range(da), repeat=2),
                  lambda i, j: ph(A.table[i][j]) == amb.mul(pa[i], pa[j]),
                  lambda i, j: (an[i], an[j])))
    trip = lambda: itertools.product(range(da), range(n), range(da))
    tl = lambda j, i, k: (an[j], hn[i], an[k])
    rep.add(sweep("ideal-i", trip(),
                  lambda j, i, k: amb.mul(pa[j], act(H.basis(i), pa[k])) ==
                  ph(A.mul(A.basis(j), m.act_basis(i, A.basis(k)))), tl))
    rep.add(sweep("ideal-ii", trip(),
                  lambda j, i, k: amb.mul(act(H.basis(i), pa[k]), pa[j]) ==
                  ph(A.mul(m.act_basis(i, A.basis(k)), A.basis(j))), tl))

    def iii(j, i, k):
        for uu, ww in ((res.u, w), (res.u_inv, wi)):
            if amb.mul(pa[j], uu.values[i * n + k]) != ph(A.mul(A.basis(j), ww.values[i * n + k])):
                return False
        return True

    def iv(j, i, k):
        for uu, ww in ((res.u, w), (res.u_inv, wi)):
            if amb.mul(uu.values[i * n + k], pa[j]) != ph(A.mul(ww.values[i * n + k], A.basis(j))):
                return False
        return True

    q = lambda: itertools.product(range(da), range(n), range(n))
    ql = lambda j, i, k: (an[j], hn[i], hn[k])
    rep.add(sweep("ideal-iii", q(), iii, ql))
    rep.add(sweep("ideal-iv", q(), iv, ql))
    image = phi.image()
    rep.add(sweep("phi-image-is-ideal-of-B", itertools.product(range(da), range(S.dim)),
                  lambda j, t: amb.mul(pa[j], S.basis[t]) in image and
                  amb.mul(S.basis[t], pa[j]) in image, lambda j, t: (an[j], f"b{t}")))

    e = ph(A.unit)
    dot = lambda hvec, theta: amb.mul(e, act(hvec, theta))
    rep.add(sweep("induced-action", itertools.product(range(n), range(da)),
                  lambda i, j: ph(m.act_basis(i, A.basis(j))) == dot(H.basis(i), pa[j]),
                  lambda i, j: (hn[i], an[j])))
    es = [dot(H.basis(i), e) for i in range(n)]
    u = lambda i, k: res.u.values[i * n + k]
    ui = lambda i, k: res.u_inv.values[i * n + k]

    def v(i, k):
        acc = amb.zero()
        for c, (h1, h2, h3) in H.sweedler(i, 3):
            for k1, k2, f in H.comult[k]:
                t = amb.mul(amb.mul(es[h1], u(h2, k1)), dot(H.table[h3][k2], e))
                acc = vadd(acc, vscale(c * f, t))
        return acc

    def v_prime(i, k):
        acc = amb.zero()
        for c, (h1, h2, h3) in H.sweedler(i, 3):
            for k1, k2, f in H.comult[k]:
                t = amb.mul(amb.mul(dot(H.table[h1][k1], e), ui(h2, k2)), es[h3])
                acc = vadd(acc, vscale(c * f, t))
        return acc

    pl = lambda i, k: (hn[i], hn[k])
    rep.add(sweep("induced-cocycle", itertools.product(range(n), repeat=2),
                  lambda i, k: ph(d.omega.values[i * n + k]) == v(i, k), pl))
    if d.omega_prime is not None:
        rep.add(sweep("induced-cocycle-inverse", itertools.product(range(n), repeat=2),
                      lambda i, k: ph(d.omega_prime.values[i * n + k]) == v_prime(i, k), pl))
    rep.payload["dim_ambient"] = amb.dim
    rep.payload["dim_B"] = S.dim
    return rep


# ---------------------------------------------------------------- extraction


@dataclass(frozen=True, eq=False)
class Extraction:
    wtilde: WTilde | None
    report: Report


def extract_wtilde(g: GlobalTwistedAction, phi: LinMap, d: TwistedPartialActionData
                   ) -> Extraction:
    """w̃(h,k) = φ⁻¹(φ(1) u(h,k)), and w̃⁻¹ likewise from u⁻¹."""
    H, B, A = g.hopf, g.algebra, d.target
    n = H.dim
    rep = Report("w̃ extracted from a globalization")
    rep.extend(global_twisted_checks(g))
    rep.add(Check("phi-injective", phi.is_injective()))
    image = phi.image()
    rep.add(sweep("phi-image-is-ideal", itertools.product(range(A.dim), range(B.dim)),
                  lambda j, t: B.mul(phi.column(j), B.basis(t)) in image and
                  B.mul(B.basis(t), phi.column(j)) in image,
                  lambda j, t: (A.labels[j], B.labels[t])))
    if not rep.passed:
        return Extraction(None, rep)
    e = phi(A.unit)
    maps = []
    for label, uu in (("", g.u), ("-inverse", g.u_inv)):
        vals, bad = [], None
        for idx in range(n * n):
            t = B.mul(e, uu.values[idx])
            pre = solve_linear(phi, t, B.field)
            if pre is None:
                bad = (H.labels[idx // n], H.labels[idx % n])
                break
            vals.append(pre)
        rep.add(Check(f"wtilde{label}-in-image", bad is None, bad))
        if bad is not None:
            return Extraction(None, rep)
        maps.append(ConvMap(g.u.source, A, tuple(vals)))
    w, wi = maps
    rep.extend(wtilde_checks(d, w, wi))
    return Extraction(WTilde(w, wi) if rep.passed else None, rep)


# ---------------------------------------------------------------- cocommutative case


def cocommutative_closure_check(res: GlobalizationResult, theta_multiplier: bool = True
                                ) -> Report:
    H = res.hopf
    if not H.cocommutative:
        raise ValueError(f"{H.name} is not cocommutative")
    if H.antipode is None:
        raise ValueError(f"{H.name} has no antipode")
    amb, A = res.ambient, res.data.target
    n, da = H.dim, A.dim
    hn = H.labels
    rep = Report("cocommutative closure of H▷φ(A)")
    gens = [res.act(H.basis(i), res.phi.column(j)) for i in range(n) for j in range(da)]
    M = Subspace.span(amb.dim, gens, amb.field)
    rep.add(sweep("closed-under-product", itertools.product(range(M.dim), repeat=2),
                  lambda i, j: amb.mul(M.basis[i], M.basis[j]) in M,
                  lambda i, j: (f"m{i}", f"m{j}")))
    S = [H.S(H.basis(i)) for i in range(n)]
    u = lambda i, k: res.u.values[i * n + k]
    u_vec = lambda hvec, k: vsum((vscale(c, u(i, k)) for i, c in enumerate(hvec) if c),
                                 amb.dim, amb.field)
    ui_vec = lambda hvec, k: vsum((vscale(c, res.u_inv.values[i * n + k])
                                   for i, c in enumerate(hvec) if c), amb.dim, amb.field)

    def theta(j, k, l):
        acc = amb.zero()
        for c, (h1, h2, h3, h4, h5) in H.sweedler(j, 5):
            t = amb.mul(amb.mul(ui_vec(S[h3], h4), res.act(S[h2], u(k, l))), u_vec(S[h1], h5))
            acc = vadd(acc, vscale(c, t))
        return acc

    thetas = {(j, k, l): theta(j, k, l) for j in range(n) for k in range(n) for l in range(n)}

    def identity(i, k, l):
        lhs = amb.zero()
        for p, q, c in H.comult[i]:
            lhs = vadd(lhs, vscale(c, res.act(H.basis(p), thetas[(q, k, l)])))
        return lhs == vscale(H.counit[i], u(k, l))

    trip = lambda: itertools.product(range(n), repeat=3)
    tl = lambda i, k, l: (hn[i], hn[k], hn[l])
    rep.add(sweep("theta-identity", trip(), identity, tl))

    def contained(t, k, l):
        for uu in (res.u, res.u_inv):
            x = uu.values[k * n + l]
            if amb.mul(M.basis[t], x) not in M or amb.mul(x, M.basis[t]) not in M:
                return False
        return True

    rep.add(sweep("cocycle-multiplies-submodule",
                  itertools.product(range(M.dim), range(n), range(n)), contained,
                  lambda t, k, l: (f"m{t}", hn[k], hn[l])))
    if theta_multiplier:
        pa = [res.phi.column(j) for j in range(da)]

        def mult(i, j, k, l):
            lhs = amb.zero()
            for p, q, c in H.comult[i]:
                lhs = vadd(lhs, vscale(c, res.act(H.basis(p),
                                                  amb.mul(pa[j], thetas[(q, k, l)]))))
            return lhs == amb.mul(res.act(H.basis(i), pa[j]), u(k, l))

        rep.add(sweep("theta-transports-cocycle",
                      itertools.product(range(n), range(da), range(n), range(n)), mult,
                      lambda i, j, k, l: (hn[i], A.labels[j], hn[k], hn[l])))
    rep.payload["dim_submodule"] = M.dim
    return rep


# ---------------------------------------------------------------- the Klein example


K4_NAMES = ("e", "a", "b", "ab")


def klein_x18_table(F=None):
    """The w̃ table for x = 1/8: nonzero only on {e,b}×{e,b}, X_{b,b} = -1/2."""
    from .exactlin import QQ
    F = F or QQ
    half = F.one / F(2)
    X = [[F.zero] * 4 for _ in range(4)]
    X[0][0] = X[0][2] = X[2][0] = half
    X[2][2] = -half
    return tuple(tuple(r) for r in X)


def klein_wtilde_map(X, d: TwistedPartialActionData) -> ConvMap:
    return from_pair_function(d.hopf, d.target, lambda g, h: (X[g][h],))


def verify_klein_wtilde_equations(X, Y, d: TwistedPartialActionData | None = None
                                  ) -> Report:
    """The displayed equation families for w̃ on (QK4)*, with X = w̃ and Y = w̃⁻¹.

    ``X[g][h] = w̃(p_g, p_h)`` with K4 indexed e, a, b, ab.
    """
    from .exactlin import QQ
    if d is None:
        d, _ = klein_family(QQ(1) / 8)
    G = d.hopf.group
    F = d.hopf.field
    m, inv = G.mul, G.inv
    L = (0, 1)
    eps = lambda g: F.one if g == G.identity else F.zero
    nm = lambda *t: tuple(G.names[x] for x in t)
    rng = range(4)
    rep = Report("w̃ equations for (QK4)* on Q")

    eq1 = sweep("normalization-first-argument", ((h,) for h in rng),
                lambda h: sum((X[g][h] for g in rng), F.zero) == eps(h), nm)
    eq12 = sweep("normalization-second-argument", ((g,) for g in rng),
                 lambda g: sum((X[g][h] for h in rng), F.zero) == eps(g), nm)

    def bilinear(g, h, f):
        lhs = sum((X[s][m(m(f, inv(h)), s)] * X[m(inv(r), g)][m(inv(s), h)]
                   for r in L for s in rng), F.zero)
        rhs = sum((X[m(inv(x), y)][m(m(h, inv(g)), y)] * X[m(inv(y), g)][f]
                   for x in L for y in rng), F.zero)
        return lhs == rhs

    eqb = sweep("cocycle-family", itertools.product(rng, repeat=3), bilinear, nm)
    eq3 = sweep("inverse-family", itertools.product(rng, repeat=2),
                lambda g, h: sum((X[r][s] * Y[m(inv(r), g)][m(inv(s), h)]
                                  for r in rng for s in rng), F.zero) == eps(g) * eps(h), nm)
    quarter = F.one / F(4)
    w = lambda g, h: d.omega.values[g * 4 + h][0]
    eq2 = sweep("omega-family", itertools.product(rng, repeat=2),
                lambda g, h: quarter * sum((X[m(inv(r), g)][m(inv(s), h)]
                                            for r in L for s in L), F.zero) == w(g, h), nm)
    checks = [eq1, eq12, eqb, eq3, eq2]
    if d.omega_prime is not None:
        wp = lambda g, h: d.omega_prime.values[g * 4 + h][0]
        checks.append(sweep(
            "omega-inverse-family", itertools.product(rng, repeat=2),
            lambda g, h: quarter * sum((Y[m(inv(r), g)][m(inv(s), h)]
                                        for r in L for s in L), F.zero) == wp(g, h), nm))
    rep.extend(checks)

    # the same statements through the generic identities
    Xm, Ym = klein_wtilde_map(X, d), klein_wtilde_map(Y, d)
    H, A = d.hopf, d.target
    gen = {c.id: c.passed for c in wtilde_checks(d, Xm, Ym)}
    generic = {
        "normalization-first-argument": all(
            Xm.pair(H.unit, H.basis(h)) == vscale(H.counit[h], A.unit) for h in rng),
        "normalization-second-argument": all(
            Xm.pair(H.basis(g), H.unit) == vscale(H.counit[g], A.unit) for g in rng),
        "cocycle-family": gen["wtilde-cocycle"],
        "inverse-family": conv_mul(Xm, Ym) == conv_unit(Xm.source, A),
        "omega-family": gen["wtilde-recovers-omega"],
        "omega-inverse-family": gen.get("wtilde-recovers-omega-inverse"),
    }
    disagree = [c.id for c in checks if generic[c.id] != c.passed]
    rep.add(Check("agrees-with-generic-identities", not disagree, tuple(disagree) or None))
    rep.payload["omega(p_e,p_e)"] = quarter * sum((X[r][s] for r in L for s in L), F.zero)
    return rep


# ---------------------------------------------------------------- builtin instances


def klein_globalization_inputs(x=None):
    """Klein data and its builtin w̃ (x = 1/8: the displayed table; x = 1/4: ε⊗ε)."""
    from .exactlin import QQ
    x = QQ(1) / 8 if x is None else QQ(x)
    d, _ = klein_family(x)
    if x == QQ(1) / 8:
        return d, klein_wtilde_map(klein_x18_table(), d)
    if x == QQ(1) / 4:
        return d, conv_unit(d.omega.source, d.target)
    raise ValueError(f"no builtin w̃ for x = {x}; supply one with --wtil")


def group_case_inputs(kind: str = "klein-cocycle"):
    """QK4 on Q: the sign cocycle on all of K4 (w̃ = γ), or L = ⟨a⟩ with w̃ = ε⊗ε."""
    G = klein_four()
    if kind == "klein-cocycle":
        d = group_cocycle_extension(G, whole_group(G), klein_nontrivial_cocycle())
        return d, d.omega
    if kind == "subgroup-a":
        L = subgroup(G, ["a"])
        d = group_cocycle_extension(G, L, trivial_cocycle(L.as_group()))
        return d, conv_unit(d.omega.source, d.target)
    raise ValueError(f"unknown group case {kind!r}")
