import random

import pytest
from hypothesis import given, settings, strategies as st

from ncrewrite.algebras import BUILTIN_NAMES, builtin
from ncrewrite.arith import GaussianRational as G
from ncrewrite.expr import ParseError, parse_expr, print_expr
from ncrewrite.freealg import Alphabet, NCPoly, random_poly

SL2 = builtin("sl2").alphabet
ACSA = builtin("acsa").alphabet


def test_racah_image_has_seven_free_terms():
    p = parse_expr("(E+F-2)*(E+F+2)/16", SL2)
    # E^2, EF, FE, F^2 and the constant; linear terms cancel
    assert len(p) == 5
    assert p.constant_term() == G(-4, 0) / 16
    words = {print_expr(NCPoly.monomial(SL2, w)) for w in p.terms}
    assert words == {"E^2", "E*F", "F*E", "F^2", "1"}


def test_power():
    H = NCPoly.gen(SL2, "H")
    assert parse_expr("H^2 - 4", SL2) == H * H - 4


def test_acsa_relation():
    J1, J2, J3 = (NCPoly.gen(ACSA, g) for g in ("J_1", "J_2", "J_3"))
    assert parse_expr("J_1*J_2 + J_2*J_1 - J_3", ACSA) == J1 * J2 + J2 * J1 - J3


def test_imaginary_unit_and_division():
    p = parse_expr("(i*E - i*F - 2)*(i*E - i*F + 2)/16", SL2)
    E, F = NCPoly.gen(SL2, "E"), NCPoly.gen(SL2, "F")
    q = ((E - F) * G(0, 1) - 2) * ((E - F) * G(0, 1) + 2) / 16
    assert p == q


@pytest.mark.parametrize("p, text", [
    (NCPoly.zero(SL2), "0"),
    (parse_expr("E*F - H", SL2), "E*F - H"),
    (NCPoly.monomial(SL2, (0, 2), G(0, 1) / 4), "(1/4)*i*E*H"),
    (parse_expr("(1/2 - 3/4*i)*E*E*F", SL2), "(1/2 - 3/4*i)*E^2*F"),
    (parse_expr("-E - 1", SL2), "-E - 1"),
])
def test_print_expr(p, text):
    assert print_expr(p) == text


@pytest.mark.parametrize("text, pos, fragment", [
    ("E*X", 2, "unknown identifier"),
    ("E F", 2, None),
    ("E^x", 2, None),
    ("E/H", 1, None),
    ("E $ F", 2, None),
    ("(E + F", 6, None),
    ("E/0", 1, None),
])
def test_parse_errors_carry_position(text, pos, fragment):
    with pytest.raises(ParseError) as info:
        parse_expr(text, SL2)
    assert info.value.pos == pos
    if fragment:
        assert fragment in str(info.value)


def test_multi_character_names_need_star():
    a = Alphabet(["A", "B", "AB"])
    assert parse_expr("AB", a) == NCPoly.gen(a, "AB")
    assert parse_expr("A*B", a) != parse_expr("AB", a)


@settings(max_examples=100)
@given(st.sampled_from(BUILTIN_NAMES), st.integers(0, 10**6))
def test_round_trip(name, seed):
    a = builtin(name).alphabet
    p = random_poly(a, random.Random(seed), 4, 5)
    assert parse_expr(print_expr(p), a) == p
