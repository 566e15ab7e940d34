import random

import pytest

from ncrewrite.algebras import (
    AUTOMORPHISMS, BUILTIN_NAMES, GroupGeneratorError, SkewPair, UnknownNameError,
    apply_automorphism, builtin, builtin_system, pair_of_normal_form, pair_to_element,
    pbw_count, pbw_count_by_base_degree, racah_data, sabotage_names, sample_file,
    skew_pair_mul,
)
from ncrewrite.expr import print_expr
from ncrewrite.freealg import commutator, random_poly


def test_builtins_load():
    for name in BUILTIN_NAMES:
        assert builtin(name).name == name


def test_unknown_name():
    with pytest.raises(UnknownNameError):
        builtin("sl3")


def test_sl2_z2_relation_count():
    assert len(builtin_system("sl2_z2").rules) == 7


def test_racah_has_no_system_but_central_elements():
    rd = racah_data()
    assert rd.presentation.system is None
    assert set(rd.central_elements()) == {"alpha", "beta", "gamma"}
    # the shipped central elements agree with the bracket definitions
    for k, v in rd.rebuilt().items():
        assert v == rd.central_elements()[k]


def test_delta_definition():
    rd = racah_data()
    assert rd.delta_definition == commutator(rd.A, rd.B) / 2


@pytest.mark.parametrize("aut, base", sorted(AUTOMORPHISMS.items()))
def test_automorphisms_square_to_identity(aut, base):
    p = builtin(base)
    rng = random.Random(5)
    for _ in range(20):
        x = p.normalize(random_poly(p.alphabet, rng, 4, 4))
        assert apply_automorphism(aut, apply_automorphism(aut, x)) == x


def test_rho_values():
    p = builtin("sl2")
    assert print_expr(apply_automorphism("rho_sl2", p.parse("E*H"))) == "-F*H"
    q = builtin("acsa")
    assert print_expr(apply_automorphism("varrho_acsa", q.parse("J_1"))) == "J_1"
    assert print_expr(apply_automorphism("varrho_acsa", q.parse("J_2"))) == "-J_2"


def test_group_letter_rejected_in_base():
    ext = builtin("sl2_z2")
    with pytest.raises(GroupGeneratorError):
        apply_automorphism("rho_sl2", ext.parse("rho"))


@pytest.mark.parametrize("base", ["sl2", "acsa"])
def test_skew_product_matches_rewriting(base):
    bp = builtin(base)
    ext = builtin({"sl2": "sl2_z2", "acsa": "acsa_z2"}[base])
    rng = random.Random(11)
    for _ in range(25):
        parts = [bp.normalize(random_poly(bp.alphabet, rng, 3, 3)) for _ in range(4)]
        x, y = SkewPair(*parts[:2]), SkewPair(*parts[2:])
        via = pair_of_normal_form(ext.normalize(pair_to_element(x, base) * pair_to_element(y, base)))
        assert via == skew_pair_mul(x, y, base)


def test_pair_of_normal_form_rejects_unreduced():
    ext = builtin("sl2_z2")
    with pytest.raises(ValueError):
        pair_of_normal_form(ext.parse("rho*E"), ext)


def test_pbw_counts():
    for name in ("sl2", "so3", "acsa"):
        s = builtin_system(name)
        assert [pbw_count(s, d) for d in range(7)] == [(d + 1) * (d + 2) // 2 for d in range(7)]


def test_pbw_z2_by_base_degree():
    s = builtin_system("sl2_z2")
    got = [pbw_count_by_base_degree(s, d, "rho") for d in range(5)]
    assert got == [2, 6, 12, 20, 30]


def test_pbw_z2_total_degree():
    # total-degree counts: (d+1)(d+2)/2 even words plus d(d+1)/2 words ending in rho
    s = builtin_system("acsa_z2")
    assert [pbw_count(s, d) for d in range(6)] == [1, 4, 9, 16, 25, 36]


def test_fixtures_present():
    assert len(sabotage_names()) == 8
    assert sample_file("acsa_q2").presentation.verifiable is False
