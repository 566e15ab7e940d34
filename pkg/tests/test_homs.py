import pytest

from ncrewrite.algebras import builtin, sabotage_file
from ncrewrite.expr import print_expr
from ncrewrite.homs import (
    BUILTIN_HOMS, DIAGRAM_ORIENTATIONS, Homomorphism, builtin_hom, compose, compose_path,
    homs_from_file, identity_hom, triangle_paths, verify_diagram, verify_hom,
    verify_mutually_inverse, verify_racah_hom,
)
from ncrewrite.presentation import PresentationError


@pytest.mark.parametrize("name", BUILTIN_HOMS)
def test_builtin_homs_respect_relations(name):
    report = verify_hom(builtin_hom(name))
    assert report.passed, report.render_text()


@pytest.mark.parametrize("name", ["racah_to_sl2", "racah_to_so3", "racah_to_acsa"])
def test_racah_checks(name):
    report = verify_racah_hom(builtin_hom(name))
    assert report.passed, report.render_text()
    assert len(report.checks) == 5


def test_racah_delta_image_in_sl2():
    h = builtin_hom("racah_to_sl2")
    assert print_expr(h.image("Delta")) == "(1/64)*F^2*H - (1/64)*E^2*H - (1/32)*F^2 - (1/32)*E^2"


def test_so3_route_matches_direct():
    via = compose(builtin_hom("so3_to_sl2"), builtin_hom("racah_to_so3"))
    direct = builtin_hom("racah_to_sl2")
    for g in "ABC":
        assert via.images[g] == direct.image(g)


def test_composed_route_to_acsa():
    route = compose_path([builtin_hom("racah_to_sl2"), builtin_hom("incl_sl2_in_sl2z2"),
                          builtin_hom("sl2_z2_to_acsa_z2")])
    assert print_expr(route.images["A"]) == "(1/4)*J_1^2 - 1/4"
    assert print_expr(route.images["C"]) == "(1/4)*J_3^2 - 1/4"


def test_inverse_pair():
    report = verify_mutually_inverse(builtin_hom("acsa_z2_to_sl2_z2"), builtin_hom("sl2_z2_to_acsa_z2"))
    assert report.passed
    assert len(report.checks) == 8


@pytest.mark.parametrize("orientation", DIAGRAM_ORIENTATIONS)
def test_diagram(orientation):
    top, bottom = triangle_paths(orientation)
    report = verify_diagram(top, bottom)
    assert report.passed
    assert [c.label.split(":")[0] for c in report.checks] == ["A", "B", "C"]


def test_identity_hom():
    p = builtin("sl2")
    assert verify_hom(identity_hom(p)).passed


def test_missing_image_rejected():
    src, tgt = builtin("sl2"), builtin("sl2")
    with pytest.raises(PresentationError):
        Homomorphism("bad", src, tgt, {"E": tgt.gen("E")})


def test_compose_type_mismatch():
    with pytest.raises(PresentationError):
        compose(builtin_hom("racah_to_sl2"), builtin_hom("so3_to_sl2"))


def test_flipped_so3_residual():
    h = homs_from_file(sabotage_file("so3_to_sl2_flipped"))[0]
    report = verify_hom(h)
    assert not report.passed
    assert report.checks[0].residual == "F - E"


def test_wrong_h_round_trip():
    h = homs_from_file(sabotage_file("sl2_z2_to_acsa_z2_wrong_h"))[0]
    report = verify_mutually_inverse(builtin_hom("acsa_z2_to_sl2_z2"), h)
    assert not report.passed
    assert any(c.residual == "-(1/2)*J_2" for c in report.failures())


def test_squared_c_breaks_diagram():
    h = homs_from_file(sabotage_file("racah_to_acsa_squared_c"))[0]
    assert not verify_racah_hom(h).passed
    top, bottom = triangle_paths("acsa_z2")
    report = verify_diagram(top, [h, bottom[1]])
    assert [c.residual for c in report.failures()] == ["-(1/2)*J_3 + 1/2"]
