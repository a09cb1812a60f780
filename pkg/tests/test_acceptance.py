"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the lines are repeated in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""
import random
import sys
from fractions import Fraction as Fr
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from hopfpartial.cli import run_command
from hopfpartial.convolution import idempotents_e_f1_f2, is_central
from hopfpartial.exactlin import GF, QQ
from hopfpartial.globalize import (build_globalization, check_wtilde,
                                   cocommutative_closure_check, extract_wtilde,
                                   group_case_inputs, klein_globalization_inputs,
                                   klein_wtilde_map, klein_x18_table,
                                   verify_klein_wtilde_equations)
from hopfpartial.groups import (builtin_group, klein_four, klein_nontrivial_cocycle, subgroup,
                                trivial_cocycle, whole_group)
from hopfpartial.hopf import hopf_from_spec, sweedler_algebra, verify_hopf
from hopfpartial.instance import parse_instance
from hopfpartial.partial import (BaseFieldFunctional, brute_force_dual_group_algebra,
                                 brute_force_group_algebra, classify_dual_group_algebra,
                                 classify_group_algebra, sweedler_measuring)
from hopfpartial.twisted import (build_crossed_product, check_twisted, global_cocycle_check,
                                 group_cocycle_extension, klein_family, partial_to_quotient,
                                 quotient_to_partial, sweedler_partial_cocycle,
                                 trivial_partial_cocycle, trivial_twisted,
                                 underline_algebra_iso_dual, underline_algebra_iso_group)
from hopfpartial.partial import global_measuring
from hopfpartial.hopf import field_algebra

FIXTURES = Path(__file__).parent / "fixtures"
RESULTS: list = []


def record(n: int, title: str, failures: list) -> None:
    ok = not failures
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {title}"
    if failures:
        line += " (" + "; ".join(failures) + ")"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_hopf_axioms():
    bad = []
    for spec in ("groupalg:K4", "dualgroupalg:K4", "groupalg:S3", "dualgroupalg:S3", "sweedler"):
        rep = verify_hopf(hopf_from_spec(spec))
        if not rep.passed or rep.get("antipode").passed is not True:
            bad.append(spec)
    record(1, "QK4, (QK4)*, QS3, (QS3)*, H4 pass every bialgebra and antipode axiom", bad)


def test_criterion_2_classification_counts():
    bad = []
    K4 = klein_four()
    if len(classify_group_algebra(K4)) != 5 or len(brute_force_group_algebra(K4)) != 5:
        bad.append("QK4 count")
    dual = classify_dual_group_algebra(K4)
    if len(dual) != 5 or len(brute_force_dual_group_algebra(K4)) != 5:
        bad.append("(QK4)* count")
    for f in dual:
        support = [i for i, x in enumerate(f.lam) if x]
        if any(f.lam[i] != Fr(1, len(support)) for i in support):
            bad.append(f"λ != 1/|L| for {f.label}")
    lam_a = next(f.lam for f in dual if f.label == "L={e,a}")
    if (lam_a[0], lam_a[1]) != (Fr(1, 2), Fr(1, 2)):
        bad.append("λ(p_e), λ(p_a) for L=<a>")
    if len(classify_dual_group_algebra(K4, GF(2))) != 1 or \
            len(brute_force_dual_group_algebra(K4, GF(2))) != 1:
        bad.append("(F2 K4)* count")
    record(2, "measuring counts 5 / 5 / 1 with brute-force certificates", bad)


def test_criterion_3_sweedler():
    bad = []
    for lx in (0, 1, -2, Fr(7, 3)):
        if not sweedler_measuring(lx).check().passed:
            bad.append(f"PM for λx={lx}")
    for lx, c in ((1, 0), (2, 7), (0, 5)):
        rep = check_twisted(sweedler_partial_cocycle(lx, c))
        needed = ["PM1", "PM2", "PM3", "TPA2", "TPA3", "TPA4", "TPA5"]
        if not rep.passed or any(i not in [x.id for x in rep.checks] for i in needed):
            bad.append(f"TPA for ({lx},{c})")
    for lx in (0, 1, -2, Fr(7, 3)):
        _, f1, _ = idempotents_e_f1_f2(sweedler_measuring(lx).measuring)
        if is_central(f1):
            bad.append(f"f1 central for λx={lx}")
    _, f1, _ = idempotents_e_f1_f2(sweedler_measuring(0, global_=True).measuring)
    if not is_central(f1):
        bad.append("f1 not central for λ=ε")
    record(3, "Sweedler measurings, partial cocycles, and no non-global symmetric case", bad)


def test_criterion_4_klein_locus():
    bad = []
    d, _ = klein_family(Fr(1, 4))
    if d.omega != trivial_partial_cocycle(d.measuring):
        bad.append("x=1/4 is not the trivial cocycle")
    d, _ = klein_family(Fr(1, 8))
    if d.omega != d.omega_prime or not check_twisted(d).passed:
        bad.append("x=1/8")
    rng = random.Random(20261016)
    xs = []
    while len(xs) < 20:
        x = Fr(rng.randint(-50, 50), rng.randint(1, 30))
        if 32 * x != 6:
            xs.append(x)
    for x in xs:
        d, p = klein_family(x)
        if not check_twisted(d).passed or 32 * p.x * p.y - 6 * (p.x + p.y) + 1 != 0:
            bad.append(f"x={x}")
    record(4, "Klein family: trivial at 1/4, self-inverse at 1/8, 20 random points on the curve",
           bad)


def test_criterion_5_quotient_correspondence():
    bad = []
    d, _ = klein_family(Fr(1, 8))
    G = d.hopf.group
    L = subgroup(G, ["a"])
    q = partial_to_quotient(d, L)
    if not q.report.passed:
        bad.append(str(q.report.first_failure().id))
    if q.v.values[0] != (Fr(1, 2),):
        bad.append("v(p_eL,p_eL)")
    back = quotient_to_partial(G, L, q.v, q.u)
    if back.omega.values != d.omega.values or back.omega_prime.values != d.omega_prime.values:
        bad.append("round trip")
    c = global_cocycle_check(d.omega, G)
    if not c.passed or c.tuples != 64:
        bad.append("global cocycle identity on 64 triples")
    record(5, "quotient cocycle v(p_eL,p_eL) = 1/2, table-identical round trip", bad)


def test_criterion_6_crossed_products():
    bad = []
    instances = [klein_family(x)[0] for x in (Fr(1, 8), Fr(1, 4), Fr(2), Fr(-3, 5))]
    instances += [sweedler_partial_cocycle(lx, c) for lx, c in ((1, 0), (2, 7), (0, 5))]
    G = klein_four()
    instances += [group_cocycle_extension(G, whole_group(G), klein_nontrivial_cocycle()),
                  trivial_twisted(global_measuring(sweedler_algebra(), field_algebra()))]
    for i, d in enumerate(instances):
        cp = build_crossed_product(d)
        if not (cp.report.get("associativity").passed and cp.report.get("unit").passed):
            bad.append(f"instance {i}")
        if i < 4 and cp.dim != 2:
            bad.append(f"Klein dim {cp.dim}")
    cert = underline_algebra_iso_group(G, whole_group(G), klein_nontrivial_cocycle())
    if not cert.report.passed:
        bad.append("twisted group ring iso")
    cert = underline_algebra_iso_group(G, subgroup(G, ["a"]),
                                       trivial_cocycle(subgroup(G, ["a"]).as_group()))
    if not cert.report.passed:
        bad.append("group ring iso for <a>")
    d, _ = klein_family(Fr(1, 8))
    cert = underline_algebra_iso_dual(d, subgroup(d.hopf.group, ["a"]))
    if not cert.report.passed or cert.report.get("multiplicative").tuples != 4:
        bad.append("dual iso")
    record(6, "crossed products associative and unital, Klein dim 2, both isomorphisms", bad)


def test_criterion_7_globalization():
    bad = []
    d, w = klein_globalization_inputs(Fr(1, 8))
    X = klein_x18_table()
    if w != klein_wtilde_map(X, d):
        bad.append("builtin table")
    if not check_wtilde(d, w).passed:
        bad.append("check_wtilde")
    if not verify_klein_wtilde_equations(X, X, d).passed:
        bad.append("displayed equations")
    res = build_globalization(d, w, strict=False)
    if not res.report.passed:
        bad.append(f"globalization: {res.report.first_failure().id}")
    g, phi, _ = res.global_action()
    ex = extract_wtilde(g, phi, d)
    if not ex.report.passed or ex.wtilde.map != w:
        bad.append("extraction round trip")
    record(7, f"X/Y tables globalize with every identity (dim B = {res.B.dim}) and round-trip",
           bad)


def test_criterion_8_cocommutative_closure():
    bad = []
    d, w = group_case_inputs("klein-cocycle")
    if not cocommutative_closure_check(build_globalization(d, w)).passed:
        bad.append("QK4 with the sign cocycle")
    d, w = klein_globalization_inputs(Fr(1, 8))
    if not cocommutative_closure_check(build_globalization(d, w)).passed:
        bad.append("(QK4)* Klein")
    record(8, "closure, θ identity and multiplier containment for QK4 and (QK4)*", bad)


def test_criterion_9_negative_controls():
    bad = []
    H = parse_instance(FIXTURES / "broken_coassoc.bialg")["H"]
    c = verify_hopf(H).get("coassociativity")
    if c.passed or not c.counterexample:
        bad.append("broken coassociativity")
    if run_command(["verify", "hopf", str(FIXTURES / "broken_coassoc.bialg")])[0] == 0:
        bad.append("CLI on broken coassociativity")
    K4 = hopf_from_spec("groupalg:K4")
    r = BaseFieldFunctional(K4, (1, 1, 1, 0)).check()
    if r.passed or not r.first_failure().counterexample:
        bad.append("non-subgroup λ")
    if run_command(["check", "measuring", str(FIXTURES / "nonsubgroup.meas")])[0] == 0:
        bad.append("CLI on non-subgroup λ")
    Xf = [list(row) for row in klein_x18_table()]
    Xf[2][2] = -Xf[2][2]
    eq = verify_klein_wtilde_equations(Xf, klein_x18_table()).get("normalization-first-argument")
    if eq.passed or eq.counterexample != ("b",):
        bad.append("sign-flipped X equations")
    d, _ = klein_family(Fr(1, 8))
    if check_wtilde(d, klein_wtilde_map(Xf, d)).passed:
        bad.append("sign-flipped X generic check")
    code, _ = run_command(["globalize", str(FIXTURES / "klein_x18.tpa"), "--wtil",
                           str(FIXTURES / "klein_flipped.wtil")])
    if code == 0:
        bad.append("CLI on sign-flipped X")
    record(9, "corrupted fixtures fail with named counterexamples and nonzero exit", bad)


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
