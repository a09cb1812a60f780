"""``hopf-partial``: verify, classify, build and globalize from the command line.

Exit codes: 0 when the report passes, 1 when a check fails, 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import os
import sys
import time

from .convolution import (ConvolutionError, conv_inverse, idempotents_e_f1_f2, ideal_inverse,
                          is_central)
from .exactlin import QQ, field_from_name
from .globalize import (build_globalization, check_wtilde, cocommutative_closure_check,
                        extract_wtilde, klein_globalization_inputs,
                        verify_klein_wtilde_equations)
from .groups import (GroupError, builtin_group, klein_nontrivial_cocycle, subgroup,
                     trivial_cocycle)
from .hopf import hopf_from_spec, verify_hopf
from .instance import InstanceBuilder, InstanceError, parse_instance
from .partial import (brute_force_dual_group_algebra, brute_force_group_algebra,
                      check_measuring, classify_dual_group_algebra, classify_group_algebra,
                      dual_subgroup_functional, partial_action_check, sweedler_completeness)
from .report import Check, Report, VerificationError
from .twisted import (TwistedPartialActionData, build_crossed_product, check_twisted,
                      klein_family, partial_to_quotient, trivial_partial_cocycle,
                      underline_algebra_iso_dual, underline_algebra_iso_group)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- helpers


def _requested_field(args):
    """The field named by --field or the environment, or None."""
    name = args.field or os.environ.get("HOPF_PARTIAL_FIELD")
    if not name:
        return None
    try:
        return field_from_name(name)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _field(args):
    return _requested_field(args) or QQ


def _load(path, F, context=None):
    """Parse an instance file; ``F`` (possibly None) must agree with its field line."""
    try:
        return parse_instance(path, F, context)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None


def _complete_inverse(d: TwistedPartialActionData, rep: Report) -> TwistedPartialActionData:
    """Fill in ω′ from the ideal generated by f1∗f2 when f1 and f2 are central."""
    if d.omega_prime is not None:
        return d
    _, f1, f2 = idempotents_e_f1_f2(d.measuring)
    if not (is_central(f1) and is_central(f2)):
        return d
    try:
        wp = ideal_inverse(d.omega, f1, f2)
    except ConvolutionError:
        return d
    if wp is None:
        rep.notes.append("ω has no inverse in the ideal generated by f1∗f2")
        return d
    rep.notes.append("ω′ solved for in the ideal generated by f1∗f2")
    return d.with_inverse(wp)


def _subgroup(G, spec: str):
    gens = [g for g in spec.split(",") if g] if spec not in ("", "e", "1") else []
    try:
        return subgroup(G, gens)
    except (GroupError, ValueError) as e:
        raise UsageError(f"bad subgroup {spec!r}: {e}") from None


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


# ---------------------------------------------------------------- commands


def cmd_verify_hopf(args) -> tuple:
    F = _field(args)
    target = args.target
    if os.path.exists(target):
        inst = _load(target, _requested_field(args))
        hs = inst.of_kind("bialgebra")
        if len(hs) != 1:
            raise UsageError(f"{target}: expected one bialgebra section")
        H = hs[0].obj
    else:
        try:
            H = hopf_from_spec(target, F)
        except (ValueError, GroupError) as e:
            raise UsageError(str(e)) from None
    return verify_hopf(H), []


def cmd_check_measuring(args) -> tuple:
    inst = _load(args.file, _requested_field(args))
    ms = inst.of_kind("measuring")
    if len(ms) != 1:
        raise UsageError(f"{args.file}: expected one measuring section")
    m = ms[0].obj
    rep = check_measuring(m)
    rep.payload["partial_action"] = partial_action_check(m).passed
    return rep, []


def cmd_check_tpa(args) -> tuple:
    inst = _load(args.file, _requested_field(args))
    d = inst.twisted_data()
    pre = Report("")
    d = _complete_inverse(d, pre)
    rep = check_twisted(d)
    rep.notes = pre.notes + rep.notes
    return rep, []


def cmd_classify(args) -> tuple:
    F = _field(args)
    spec = args.hopf
    tables = []
    if spec in ("sweedler", "H4"):
        if F != QQ:
            raise UsageError("the Sweedler classification is over Q")
        rep = sweedler_completeness()
        return rep, tables
    kind, _, gname = spec.partition(":")
    try:
        G = builtin_group(gname)
    except GroupError as e:
        raise UsageError(str(e)) from None
    rep = Report(f"partial measurings of {spec} on {F.name}")
    if kind == "groupalg":
        found = classify_group_algebra(G, F)
        brute = brute_force_group_algebra(G, F)
    elif kind == "dualgroupalg":
        found = classify_dual_group_algebra(G, F)
        brute = brute_force_dual_group_algebra(G, F)
    else:
        raise UsageError(f"cannot classify {spec!r}")
    for f in found:
        rep.add(Check(f"measuring {f.label}", f.check().passed))
        tables.append(f"{f.label}: λ = " + _fmt_vec(f.lam))
    supports = sorted((tuple(i for i, x in enumerate(f.lam) if x) for f in found),
                      key=lambda s: (len(s), s))
    rep.add(Check("brute-force-agrees", supports == brute, None,
                  f"{len(brute)} supports found by exhaustive search"))
    rep.payload["count"] = len(found)
    return rep, tables


def _klein_data(x, F):
    try:
        return klein_family(F(x) if isinstance(x, str) else x, F)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(str(e)) from None


def cmd_klein(args) -> tuple:
    F = _field(args)
    try:
        x = F.parse(args.x)
    except ValueError as e:
        raise UsageError(str(e)) from None
    d, point = _klein_data(x, F)
    rep = Report(f"Klein family at x = {args.x}")
    rep.merge(check_twisted(d))
    rep.payload["y"] = point.y
    rep.add(Check("locus", 32 * point.x * point.y - 6 * (point.x + point.y) + 1 == 0))
    rep.payload["omega(p_e,p_e)"] = d.omega.values[0][0]
    tables = [_pair_table(d.omega, "ω")]
    if args.globalize:
        if args.globalize == "builtin":
            if F != QQ:
                raise UsageError("the builtin w̃ tables are over Q")
            try:
                d2, w = klein_globalization_inputs(x)
            except ValueError as e:
                raise UsageError(str(e)) from None
            d = d2
        else:
            w = _wtilde_for(d, args.globalize, F)
        _globalization_section(rep, d, w, klein=True)
    return rep, tables


def _pair_table(w, name) -> str:
    H = w.source
    n = int(round(H.dim ** 0.5))
    labels = [H.labels[i * n][1:-1].split("⊗")[0] for i in range(n)]
    rows = [f"{name}:  " + "  ".join(labels)]
    for i in range(n):
        rows.append(f"  {labels[i]}: " + "  ".join(
            ",".join(str(c) for c in w.values[i * n + k]) for k in range(n)))
    return "\n".join(rows)


def _wtilde_for(d: TwistedPartialActionData, path, F):
    b = InstanceBuilder(F)
    b.add("bialgebra", "H", d.hopf)
    b.add("algebra", "A", d.target)
    b.add("measuring", "m", d.measuring, "H", "A")
    return _load(path, F, b.inst).wtilde()


def _globalization_section(rep: Report, d, w, klein=False):
    wrep = check_wtilde(d, w)
    rep.merge(wrep, "wtilde: ")
    if klein and d.hopf.dim == 4 and d.target.dim == 1:
        vals = [[w.values[g * 4 + h][0] for h in range(4)] for g in range(4)]
        wi = conv_inverse(w)
        if wi is None:
            rep.notes.append("w̃ has no convolution inverse; the equations use Y = X")
            inv = vals
        else:
            inv = [[wi.values[g * 4 + h][0] for h in range(4)] for g in range(4)]
        rep.merge(verify_klein_wtilde_equations(vals, inv, d), "equations: ")
    if not wrep.passed:
        return None
    res = build_globalization(d, w, strict=False)
    rep.merge(res.report, "globalization: ")
    if res.report.passed:
        g, phi, _ = res.global_action()
        ex = extract_wtilde(g, phi, d)
        rep.merge(ex.report, "extraction: ")
        rep.add(Check("round-trip", ex.wtilde is not None and ex.wtilde.map == w))
        if d.hopf.cocommutative:
            rep.merge(cocommutative_closure_check(res), "cocommutative: ")
    return res


def cmd_crossed_product(args) -> tuple:
    inst = _load(args.file, _requested_field(args))
    d = inst.twisted_data()
    try:
        cp = build_crossed_product(d)
    except VerificationError as e:
        return e.report, []
    A, H = d.target, d.hopf
    tables = []
    pair_labels = [f"{a}⊗{h}" for a in A.labels for h in H.labels]
    for i, v in enumerate(cp.space.basis):
        terms = [f"{c}*{pair_labels[t]}" for t, c in enumerate(v) if c]
        tables.append(f"v{i} = " + " + ".join(terms))
    alg = cp.algebra
    for i in range(alg.dim):
        for j in range(alg.dim):
            terms = [f"{c}*v{k}" for k, c in enumerate(alg.table[i][j]) if c]
            tables.append(f"v{i} * v{j} = " + (" + ".join(terms) or "0"))
    return cp.report, tables


def cmd_iso(args) -> tuple:
    F = _field(args)
    try:
        G = builtin_group(args.group)
    except GroupError as e:
        raise UsageError(str(e)) from None
    L = _subgroup(G, args.L)
    if args.kind == "group":
        Lg = L.as_group()
        if args.cocycle == "klein":
            if Lg.order != 4 or any(Lg.mul(g, g) != Lg.identity for g in range(4)):
                raise UsageError("the klein cocycle needs L = K4")
            v = klein_nontrivial_cocycle(F)
            v = type(v)(Lg, v.values, F)
        else:
            v = trivial_cocycle(Lg, F)
        cert = underline_algebra_iso_group(G, L, v)
        return cert.report, []
    if not L.is_central():
        raise UsageError("L must be central")
    if args.x is not None:
        if args.group != "K4" or L.names != ("e", "a"):
            raise UsageError("--x is for the Klein family: --group K4 --L a")
        d, _ = _klein_data(F.parse(args.x), F)
        L = _subgroup(d.hopf.group, args.L)
    else:
        from .hopf import dual_group_algebra
        H = dual_group_algebra(G, F)
        m = dual_subgroup_functional(H, L).measuring
        d = TwistedPartialActionData(m, trivial_partial_cocycle(m), None, "trivial cocycle")
        d = _complete_inverse(d, Report(""))
    q = partial_to_quotient(d, L)
    rep = Report(f"quotient cocycle and isomorphism for L = {{{','.join(L.names)}}}")
    rep.merge(q.report, "quotient: ")
    if q.report.passed:
        cert = underline_algebra_iso_dual(d, L)
        rep.merge(cert.report, "iso: ")
    return rep, []


def cmd_globalize(args) -> tuple:
    inst = _load(args.file, _requested_field(args))
    d = inst.twisted_data()
    rep = Report(f"globalization of {args.file}")
    d = _complete_inverse(d, rep)
    if args.wtil is None:
        raise UsageError("--wtil FILE is required")
    w = _load(args.wtil, inst.field, inst).wtilde()
    res = _globalization_section(rep, d, w)
    if args.save and res is not None and res.report.passed:
        g, phi, _ = res.global_action()
        b = InstanceBuilder(inst.field)
        for s in inst.sections.values():
            b.inst.sections[s.name] = s
        if d.omega_prime is not None and not any(
                s.args[-2:] == ("inverse-of", d.name) for s in inst.of_kind("cocycle")):
            b.add("cocycle", d.name + "_inv", d.omega_prime, _measuring_name(inst, d),
                  "inverse-of", d.name)
        from .partial import MeasuringData
        b.add("algebra", "B", g.algebra, str(g.algebra.dim))
        hname = next(s.name for s in inst.of_kind("bialgebra"))
        b.add("measuring", "act", MeasuringData(g.hopf, g.algebra, g.table), hname, "B")
        b.add("cocycle", "u", g.u, "act")
        b.add("cocycle", "u_inv", g.u_inv, "act", "inverse-of", "u")
        aname = next(s.args[1] for s in inst.of_kind("measuring"))
        b.add("map", "phi", phi, aname, "B")
        with open(args.save, "w", encoding="utf-8") as fh:
            fh.write(b.text())
        rep.notes.append(f"globalization written to {args.save}")
    return rep, []


def _measuring_name(inst, d) -> str:
    return next(s.name for s in inst.of_kind("measuring") if s.obj is d.measuring)


def cmd_extract(args) -> tuple:
    inst = _load(args.file, _requested_field(args))
    g, phi = inst.global_action()
    d = inst.twisted_data()
    ex = extract_wtilde(g, phi, d)
    rep = ex.report
    tables = []
    if ex.wtilde is not None:
        tables.append(_pair_table(ex.wtilde.map, "w̃"))
        tables.append(_pair_table(ex.wtilde.inverse, "w̃⁻¹"))
    return rep, tables


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=("text", "json", "table"), default="text",
                        help="report format (table adds the computed tables to the text)")
    common.add_argument("--field",
                        help="Q or Fp:<p> (default: $HOPF_PARTIAL_FIELD or Q)")
    p = argparse.ArgumentParser(prog="hopf-partial",
                                description="Exact verification of twisted partial Hopf actions.")
    sub = p.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="verify a bialgebra").add_subparsers(dest="what", required=True)
    s = verify.add_parser("hopf", parents=[common], help="bialgebra and antipode axioms")
    s.add_argument("target", help="instance file or groupalg:G, dualgroupalg:G, sweedler")
    s.set_defaults(func=cmd_verify_hopf)

    check = sub.add_parser("check", help="check a measuring or twisted partial action").add_subparsers(dest="what", required=True)
    s = check.add_parser("measuring", parents=[common], help="PM1-PM3 for a measuring file")
    s.add_argument("file")
    s.set_defaults(func=cmd_check_measuring)
    s = check.add_parser("tpa", parents=[common], help="twisted partial action axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_check_tpa)

    classify = sub.add_parser("classify", help="classify measurings on the base field").add_subparsers(dest="what", required=True)
    s = classify.add_parser("measurings", parents=[common],
                            help="partial measurings on the base field")
    s.add_argument("--hopf", required=True, help="groupalg:G, dualgroupalg:G or sweedler")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("klein", parents=[common], help="the Klein family of (QK4)* on Q")
    s.add_argument("--x", required=True)
    s.add_argument("--globalize", metavar="builtin|FILE")
    s.set_defaults(func=cmd_klein)

    s = sub.add_parser("crossed-product", parents=[common],
                       help="build and check the partial crossed product")
    s.add_argument("file")
    s.set_defaults(func=cmd_crossed_product)

    s = sub.add_parser("iso", parents=[common], help="crossed product isomorphisms")
    s.add_argument("kind", choices=("dual", "group"))
    s.add_argument("--group", required=True)
    s.add_argument("--L", required=True, help="comma-separated generators, or e")
    s.add_argument("--cocycle", choices=("trivial", "klein"), default="trivial")
    s.add_argument("--x", help="use the Klein family at x (dual, K4, L = a)")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("globalize", parents=[common], help="globalize from a w̃ file")
    s.add_argument("file")
    s.add_argument("--wtil", required=True)
    s.add_argument("--save", help="write the globalization as an instance file")
    s.set_defaults(func=cmd_globalize)

    s = sub.add_parser("extract-wtil", parents=[common],
                       help="recover w̃ from a globalization file")
    s.add_argument("file")
    s.set_defaults(func=cmd_extract)
    return p


def run_command(argv) -> tuple:
    """Return ``(exit code, rendered output)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (2 if e.code else 0), ""
    t0 = time.perf_counter()
    try:
        rep, tables = args.func(args)
    except (UsageError, InstanceError) as e:
        return 2, f"error: {e}"
    except VerificationError as e:
        rep, tables = e.report, []
    rep.elapsed = time.perf_counter() - t0
    if args.emit == "json":
        out = rep.to_json()
    else:
        out = rep.to_text()
        if args.emit == "table" and tables:
            out += "\n" + "\n".join(tables)
    return (0 if rep.passed else 1), out


def main(argv=None) -> int:
    code, out = run_command(sys.argv[1:] if argv is None else argv)
    if out:
        stream = sys.stderr if code == 2 else sys.stdout
        print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
