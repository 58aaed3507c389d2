import json

import pytest

from permpairs import parse_pair
from permpairs.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main

S8 = ["--white", "(1,2,3)(4,5,6)(7,8)", "--black", "(1,7,5)(2,6,4)(3,8)"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "white, black, chi, genus",
    [("(1,2,5,3)(4)", "(1,2,3)(4,5)", 0, 1), ("(1)", "(1)", 2, 0), ("(1,2,3)(4)", "(1,2,4,3)", 0, 1)],
)
def test_analyze(capsys, white, black, chi, genus):
    code, out, _ = run(capsys, "analyze", "--white", white, "--black", black, "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert (data["chi"], data["genus"], data["transitive"]) == (chi, genus, True)
    assert parse_pair(data["white"], data["black"]) == parse_pair(white, black)


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "--white", "(1,2)", "--black", "(1)", "--degree", "3")
    assert code == EXIT_OK
    assert "white: (1,2)(3)" in out and "transitive: false" in out


def test_classify_single(capsys):
    code, out, _ = run(capsys, "classify", *S8, "--a", "1", "--b", "8", "--json")
    row = json.loads(out)["rows"][0]
    assert code == EXIT_OK
    assert (row["type"], row["exceptional"], row["genus_effect"], row["transitive_after"]) == (
        "P3", "Tame2", "Lowering", True)
    _, out, _ = run(capsys, "classify", *S8, "--a", "3", "--b", "7", "--json")
    row = json.loads(out)["rows"][0]
    assert (row["exceptional"], row["transitive_after"]) == ("Tame2", False)


def test_classify_all_pairs(capsys):
    code, out, _ = run(capsys, "classify", "--white", "(1,2)(3)", "--black", "(1)(2,3)")
    lines = out.strip().splitlines()
    assert code == EXIT_OK
    assert lines[0].split() == ["a", "b", "type", "exceptional", "genus_effect", "predicted_branch",
                                "transitive_after"]
    assert len(lines) == 1 + 6
    assert lines[1].split()[:4] == ["1", "2", "P1", "None"]


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--white", "(1,2)", "--black", "(1)", "--a", "1", "--b", "1"],
        ["reroute", "--white", "(1,2)", "--black", "(1)"],
        ["reroute", "--white", "(1,2)", "--black", "(1)", "--a", "1", "--b", "9"],
        ["analyze", "--white", "(1,2", "--black", "(1)"],
        ["analyze", "--white", "(1,5)", "--black", "(1)", "--degree", "3"],
        ["analyze", "--white", "(1,2)"],
        ["verify", "--degree", "99"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_parse_error_reports_position(capsys):
    _, _, err = run(capsys, "analyze", "--white", "(1,2,,3)", "--black", "(1)")
    assert "line 1, column 6" in err


def test_reroute(capsys):
    code, out, _ = run(capsys, "reroute", "--white", "(1,2)(3)", "--black", "(1)(2,3)", "--a", "1", "--b", "3",
                       "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert (data["white"], data["black"]) == ("(1W,2)(1B,3)", "(1W)(1B)(2,3)")
    assert parse_pair(data["white"], data["black"]).ground == parse_pair("(1W,2)(1B,3)", "(1W)(1B)(2,3)").ground


def test_conjugate(capsys):
    code, out, _ = run(capsys, "conjugate", "--white", "(1,2,3)(4)", "--black", "(1,2,4,3)", "--a", "1", "--b", "4",
                       "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["transitive"] is True
    assert (data["genus_before"], data["genus_after"]) == (1, 0)


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--degree", "3")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["cases_checked"] == 216 and data["failures"] == 0


def test_verify_failure_exit_code(monkeypatch, capsys):
    from permpairs import verify

    real = verify.verify_all
    monkeypatch.setattr(verify, "verify_all",
                        lambda degree, **kw: real(degree, classify=verify.swapped_np1_classifier, **kw))
    code, out, _ = run(capsys, "verify", "--degree", "3")
    assert code == EXIT_FAIL
    assert json.loads(out)["failures"] > 0


def test_export_dot_and_out_file(tmp_path, capsys):
    target = tmp_path / "model.dot"
    code, out, _ = run(capsys, "export-dot", "--white", "(1,2,3)(4)", "--black", "(1,2,3)(4)", "--out", str(target))
    assert code == EXIT_OK and out == ""
    assert target.read_text().startswith("graph model {")
    _, out, _ = run(capsys, "export-dot", "--white", "(1,2,3)(4)", "--black", "(1,2,3)(4)")
    assert out == target.read_text()


def test_pair_file(tmp_path, capsys):
    path = tmp_path / "pair.txt"
    path.write_text("# example\nwhite: (1,2,5,3)(4)\nblack: (1,2,3)(4,5)\n")
    code, out, _ = run(capsys, "analyze", "--pair-file", str(path), "--json")
    assert code == EXIT_OK
    assert json.loads(out)["chi"] == 0


def test_output_is_deterministic(capsys):
    first = run(capsys, "classify", *S8, "--json")[1]
    assert first == run(capsys, "classify", *S8, "--json")[1]
