import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ncrewrite.algebras import builtin, builtin_system
from ncrewrite.arith import I, GaussianRational as G
from ncrewrite.freealg import random_poly
from ncrewrite.repmat import (
    INDUCED_NAMES, ExactMatrix, Representation, eval_poly, induced_rep, sl2_irrep, verify_rep, weyl_operator,
)

from conftest import gaussians


def test_irrep_n2():
    r = sl2_irrep(2)
    assert r.matrix("H") == ExactMatrix.integer([[2, 0, 0], [0, 0, 0], [0, 0, -2]])
    assert r.matrix("E") == ExactMatrix.integer([[0, 2, 0], [0, 0, 1], [0, 0, 0]])
    assert r.matrix("F") == ExactMatrix.integer([[0, 0, 0], [1, 0, 0], [0, 2, 0]])


def test_weyl_is_involution():
    for n in range(5):
        w = weyl_operator(n)
        assert w @ w == ExactMatrix.identity(n + 1)


def test_exact_matrix_reduces_denominator():
    m = ExactMatrix.from_entries([[Fraction(1, 2), Fraction(1, 2)], [0, 1]])
    assert m.den == 2
    assert (m.scale(2)).den == 1
    assert m.entry(0, 0) == G(Fraction(1, 2))


def test_complex_product():
    m = ExactMatrix.from_entries([[I]])
    assert m @ m == ExactMatrix.integer([[-1]])


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        ExactMatrix.identity(2) @ ExactMatrix.identity(3)


@settings(max_examples=50)
@given(st.lists(gaussians, min_size=8, max_size=8))
def test_matmul_matches_scalar_formula(xs):
    a = ExactMatrix.from_entries([xs[0:2], xs[2:4]])
    b = ExactMatrix.from_entries([xs[4:6], xs[6:8]])
    c = a @ b
    for i in range(2):
        for j in range(2):
            assert c.entry(i, j) == a.entry(i, 0) * b.entry(0, j) + a.entry(i, 1) * b.entry(1, j)


def test_large_integers_do_not_overflow():
    m = ExactMatrix.integer([[10**12, 0], [0, 1]])
    assert (m @ m @ m).entry(0, 0) == G(10**36)
    assert m.re.dtype == np.dtype(object)


@pytest.mark.parametrize("name", ["sl2", "sl2_z2", "so3", "acsa", "acsa_z2"])
@pytest.mark.parametrize("n", [0, 1, 4])
def test_relations_hold(name, n):
    assert verify_rep(builtin_system(name), induced_rep(name, n), name).passed


def test_racah_relations_hold():
    assert verify_rep(builtin("racah"), induced_rep("racah_images", 3)).passed


def test_swapped_rep_fails():
    good = sl2_irrep(2)
    mats = dict(good.assignment)
    mats["E"], mats["F"] = mats["F"], mats["E"]
    bad = Representation(good.alphabet, mats, good.dim)
    assert not verify_rep(builtin_system("sl2"), bad).passed


def test_eval_respects_normalisation():
    p = builtin("sl2_z2")
    rep = induced_rep("sl2_z2", 3)
    rng = random.Random(3)
    for _ in range(10):
        x = random_poly(p.alphabet, rng, 4, 4)
        assert eval_poly(x, rep) == eval_poly(p.normalize(x), rep)


def test_induced_names():
    assert set(INDUCED_NAMES) >= {"sl2", "acsa_z2", "racah_images"}
