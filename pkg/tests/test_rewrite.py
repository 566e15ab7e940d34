import random

import pytest
from hypothesis import given, settings, strategies as st

from ncrewrite.algebras import builtin, builtin_system
from ncrewrite.expr import parse_expr, print_expr
from ncrewrite.freealg import Alphabet, NCPoly, random_poly
from ncrewrite.rewrite import (
    FUEL_ENV, FuelExhausted, OrientationError, RewriteRule, check_confluence,
    critical_pairs, default_fuel, orient,
)

SL2 = builtin("sl2")


def nf(name, text):
    p = builtin(name)
    return print_expr(p.normalize(p.parse(text)))


@pytest.mark.parametrize("name, text, expected", [
    ("sl2", "F*E", "E*F - H"),
    ("sl2", "H*E", "E*H + 2*E"),
    ("sl2", "H*F", "F*H - 2*F"),
    ("sl2", "F*E*E", "E^2*F - 2*E*H - 2*E"),
    ("so3", "I_2*I_1", "I_1*I_2 - I_3"),
    ("acsa", "J_2*J_1", "-J_1*J_2 + J_3"),
    ("sl2_z2", "rho*rho", "1"),
    ("sl2_z2", "rho*E", "F*rho"),
    ("sl2_z2", "rho*H", "-H*rho"),
])
def test_normal_forms(name, text, expected):
    assert nf(name, text) == expected


def test_orientation_picks_leading_word():
    rules = SL2.require_system().rules
    lhs = sorted(SL2.alphabet.word_str(r.lhs, "*") for r in rules)
    assert lhs == ["F*E", "H*E", "H*F"]


def test_rule_must_decrease():
    a = Alphabet(["x", "y"])
    with pytest.raises(OrientationError):
        RewriteRule((0,), NCPoly.gen(a, "y"))


def test_ambiguous_rules_rejected():
    a = Alphabet(["x", "y"])
    with pytest.raises(OrientationError):
        orient([parse_expr("y*x - x*y", a), parse_expr("y*x - 2*x*y", a)], a)


def test_zero_relation_rejected():
    a = Alphabet(["x"])
    with pytest.raises(OrientationError):
        orient([NCPoly.zero(a)], a)


@pytest.mark.parametrize("name, words", [
    ("sl2", ["H*F*E"]),
    ("so3", ["I_3*I_2*I_1"]),
    ("acsa", ["J_3*J_2*J_1"]),
])
def test_single_overlap(name, words):
    report = check_confluence(builtin_system(name))
    assert report.passed
    assert report.overlap_words() == words


@pytest.mark.parametrize("name", ["sl2_z2", "acsa_z2"])
def test_skew_systems_confluent(name):
    report = check_confluence(builtin_system(name))
    assert report.passed
    assert len(report.checks) == 8


def test_confluence_message():
    assert check_confluence(builtin_system("acsa")).verdict_text == "confluent; 1 critical pair resolved"


def test_fe_variant_stays_confluent():
    # [E,F] = -H instead of H: Jacobi still holds, so no ambiguity fails
    a = SL2.alphabet
    rels = [parse_expr(t, a) for t in ("H*E - E*H - 2*E", "H*F - F*H + 2*F", "E*F - F*E + H")]
    assert check_confluence(orient(rels, a)).passed


def test_self_overlap_found():
    a = Alphabet(["x", "y"])
    sys_ = orient([parse_expr("x*x*x - y", a)], a)
    words = [cp.describe() for cp in critical_pairs(sys_)]
    assert "x^4" in words and "x^5" in words


def test_inclusion_found():
    a = Alphabet(["x", "y", "z"])
    sys_ = orient([parse_expr("z*y*z - x", a), parse_expr("y - x", a)], a)
    kinds = {cp.kind for cp in critical_pairs(sys_)}
    assert "inclusion" in kinds


def test_fuel_exhaustion():
    system = builtin_system("sl2").with_fuel(5)
    p = SL2.parse("F^4*E^4")
    with pytest.raises(FuelExhausted):
        system.normalize(p)


def test_fuel_env(monkeypatch):
    monkeypatch.setenv(FUEL_ENV, "17")
    assert default_fuel() == 17
    monkeypatch.setenv(FUEL_ENV, "zero")
    with pytest.raises(ValueError):
        default_fuel()


def test_nonterminating_rules_cannot_be_built():
    a = Alphabet(["x", "y"])
    with pytest.raises(OrientationError):
        RewriteRule((0, 1), parse_expr("y*x", a))


@settings(max_examples=40)
@given(st.sampled_from(["sl2", "so3", "acsa", "sl2_z2", "acsa_z2"]), st.integers(0, 10**6))
def test_normal_form_is_irreducible_and_idempotent(name, seed):
    p = builtin(name)
    system = p.require_system()
    q = system.normalize(random_poly(p.alphabet, random.Random(seed), 4, 4))
    assert system.normalize(q) == q
    assert not any(system.is_reducible(w) for w in q.terms)


@settings(max_examples=40)
@given(st.sampled_from(["sl2", "so3", "acsa", "sl2_z2", "acsa_z2"]), st.integers(0, 10**6))
def test_normalize_is_multiplicative(name, seed):
    p = builtin(name)
    rng = random.Random(seed)
    x, y = random_poly(p.alphabet, rng, 3, 3), random_poly(p.alphabet, rng, 3, 3)
    assert p.normalize(x * y) == p.normalize(p.normalize(x) * p.normalize(y))
    assert p.normalize(x + y) == p.normalize(x) + p.normalize(y)
