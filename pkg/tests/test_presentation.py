import pytest

from ncrewrite.presentation import PresentationError, load_presentation_file, loads_presentation

GOOD = """
name: toy
generators: [x, y]
relations:
  - {label: "yx = xy", expr: "y*x - x*y"}
homomorphisms:
  - {name: toy_to_sl2, target: sl2, images: {x: "H", y: "H^2"}}
"""


def test_load_and_normalize():
    pf = loads_presentation(GOOD)
    p = pf.presentation
    assert p.alphabet.names == ("x", "y")
    assert str(p.normalize(p.parse("y*x"))) == "x*y"
    assert pf.homomorphisms[0].target == "sl2"


def test_missing_generators():
    with pytest.raises(PresentationError, match="generators or a source"):
        loads_presentation("name: bad\n")


def test_bad_relation_is_named():
    text = "name: bad\ngenerators: [x]\nrelations:\n  - {label: oops, expr: 'x*z'}\n"
    with pytest.raises(PresentationError, match="oops"):
        loads_presentation(text)


def test_unorientable_relation():
    text = "name: bad\ngenerators: [x]\nrelations: ['x - x']\n"
    with pytest.raises(PresentationError):
        loads_presentation(text)


def test_invalid_yaml():
    with pytest.raises(PresentationError, match="invalid YAML"):
        loads_presentation("name: [unclosed")


def test_unreadable_file(tmp_path):
    with pytest.raises(PresentationError, match="cannot read"):
        load_presentation_file(tmp_path / "missing.yaml")


def test_central_elements_add_commutators():
    text = "name: c\ngenerators: [x, y]\norient: false\ncentral: {z: 'x*y'}\n"
    p = loads_presentation(text).presentation
    assert [lab for lab, _ in p.relations] == ["[z,x] = 0", "[z,y] = 0"]
    assert p.system is None


def test_source_only_file():
    pf = loads_presentation("source: sl2\nautomorphisms:\n  flip: {E: F, F: E, H: -H}\n")
    assert pf.presentation is None
    assert pf.source_name == "sl2"
    assert pf.automorphisms["flip"]["H"] == "-H"
