import pytest
from hypothesis import given, strategies as st

from hopfpartial.exactlin import GF, QQ
from hopfpartial.hopf import verify_hopf
from hopfpartial.instance import (InstanceBuilder, InstanceError, format_instance,
                                  parse_instance, parse_text)
from hopfpartial.partial import MeasuringData
from hopfpartial.twisted import klein_measuring
from conftest import FIXTURES, small_rationals

CANONICAL = ["klein_x18.tpa", "sweedler_l1_c0.tpa", "broken_coassoc.bialg", "sweedler.bialg",
             "nonsubgroup.meas", "z3.group"]


@pytest.mark.parametrize("name", CANONICAL)
def test_canonical_files_round_trip(name):
    path = FIXTURES / name
    assert format_instance(parse_instance(path)) == path.read_text(encoding="utf-8")


def test_klein_fixture_has_four_sections():
    inst = parse_instance(FIXTURES / "klein_x18.tpa")
    assert [s.kind for s in inst.sections.values()] == ["bialgebra", "algebra", "measuring",
                                                        "cocycle"]
    d = inst.twisted_data()
    assert d.omega_prime is None and d.omega.values[0] == (QQ(1) / 8,)


def test_explicit_sweedler_file_is_hopf():
    inst = parse_instance(FIXTURES / "sweedler.bialg")
    assert verify_hopf(inst["H4"]).passed


def test_group_section_feeds_a_builtin_bialgebra():
    inst = parse_instance(FIXTURES / "z3.group")
    assert inst["H"].dim == 3 and verify_hopf(inst["H"]).passed


def test_zero_denominator_names_the_line():
    with pytest.raises(InstanceError, match="line 6") as e:
        parse_instance(FIXTURES / "bad_literal.tpa")
    assert e.value.line == 6


def test_dangling_group_reference():
    with pytest.raises(InstanceError, match="undefined group 'V4'"):
        parse_instance(FIXTURES / "dangling_group.tpa")


def test_wtilde_file_needs_its_context():
    with pytest.raises(InstanceError, match="undefined measuring"):
        parse_instance(FIXTURES / "klein.wtil")
    ctx = parse_instance(FIXTURES / "klein_x18.tpa")
    w = parse_instance(FIXTURES / "klein.wtil", context=ctx).wtilde()
    assert w.values[0] == (QQ(1) / 2,)


@pytest.mark.parametrize("text,msg", [
    ("widget W\n", "unknown section kind"),
    ("  p_e ⊗ 1 -> 1\n", "outside a section"),
    ("algebra A builtin field\nalgebra A builtin field\n", "duplicate"),
    ("algebra A builtin field\nfield Q\n", "first line"),
    ("bialgebra H builtin sweedler\nalgebra A builtin field\nmeasuring m H A\n  z ⊗ 1 -> 1\n",
     "unknown bialgebra basis label"),
    ("bialgebra H builtin sweedler\nalgebra A builtin field\nmeasuring m H A\n  x ⊗ 1 -> 1 2\n",
     "expected 1 entries"),
    ("algebra A builtin field\nmeasuring m A A\n", "is a algebra, expected a bialgebra"),
])
def test_syntax_errors(text, msg):
    with pytest.raises(InstanceError, match=msg):
        parse_text(text)


def test_prime_field_files():
    text = "field Fp:5\n\nbialgebra H builtin groupalg:K4\n\nalgebra A builtin field\n\n" \
           "measuring m H A\n  e ⊗ 1 -> 3 mod 5\n"
    inst = parse_text(text)
    assert inst.field == GF(5)
    assert inst["m"].table[0][0] == (GF(5)(3),)
    assert format_instance(inst) == text.replace("3 mod 5", "3")
    with pytest.raises(InstanceError):
        parse_text(text, field=QQ)


@given(st.lists(small_rationals, min_size=4, max_size=4))
def test_measuring_tables_round_trip(vals):
    m = klein_measuring()
    table = tuple(((v,),) for v in vals)
    b = InstanceBuilder()
    b.add("bialgebra", "H", m.hopf, builtin="dualgroupalg:K4")
    b.add("algebra", "A", m.target, builtin="field")
    b.add("measuring", "m", MeasuringData(m.hopf, m.target, table), "H", "A")
    text = b.text()
    again = parse_text(text)
    assert again["m"].table == table
    assert format_instance(again) == text
