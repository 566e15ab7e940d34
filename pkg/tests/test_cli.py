import json

import pytest

from ncrewrite.cli import main

SABOTAGE = "src/ncrewrite/data/sabotage"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalize(capsys):
    assert run(capsys, "normalize", "--algebra", "sl2", "--expr", "F*E") == (0, "E*F - H\n", "")


def test_normalize_structured(capsys):
    code, out, _ = run(capsys, "normalize", "--algebra", "sl2", "--expr", "F*E", "--format", "structured")
    doc = json.loads(out)
    assert code == 0
    assert doc["reports"][0]["checks"][0]["result"] == "E*F - H"


def test_confluence(capsys):
    code, out, _ = run(capsys, "confluence", "--algebra", "acsa")
    assert code == 0
    assert "confluent; 1 critical pair resolved" in out


def test_confluence_failure_names_overlap(capsys):
    code, out, _ = run(capsys, "confluence", "--file", f"{SABOTAGE}/sl2_flipped_hf.yaml")
    assert code == 1
    assert "H*F*E" in out and "-4*H" in out


def test_verify_hom_file_fails(capsys):
    code, out, _ = run(capsys, "verify-hom", "--file", f"{SABOTAGE}/so3_to_sl2_flipped.yaml")
    assert code == 1
    assert "residual: F - E" in out


@pytest.mark.parametrize("argv", [
    ["verify-hom", "--name", "acsa_to_sl2z2"],
    ["verify-racah", "--name", "racah_to_acsa"],
    ["verify-inverse", "--pair", "acsa_z2_to_sl2_z2,sl2_z2_to_acsa_z2"],
    ["verify-diagram"],
    ["rep-check", "--algebra", "acsa_z2", "--dim", "4"],
    ["rep-check", "--algebra", "racah", "--dim", "3"],
    ["pbw-count", "--algebra", "sl2_z2", "--max-degree", "4"],
])
def test_passing_commands(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out


@pytest.mark.parametrize("argv", [
    ["normalize", "--algebra", "sl2", "--expr", "F*X"],
    ["verify-inverse", "--pair", "acsa_z2_to_sl2_z2"],
    ["verify-inverse", "--pair", "nope,sl2_z2_to_acsa_z2"],
    ["verify-hom", "--file", "/nonexistent.yaml"],
    ["rep-check", "--algebra", "sl2", "--dim", "0"],
    ["pbw-count", "--algebra", "racah", "--max-degree", "2"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("ncrewrite:")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["normalize", "--algebra", "sl3", "--expr", "E"])
    assert info.value.code == 2


def test_structured_output_is_deterministic(capsys):
    argv = ["verify-diagram", "--format", "structured"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    assert json.loads(a)["format"] == "ncrewrite-report/1"
