"""Command-line behavior beyond the acceptance contract test: formats,
file output, and the usage/resource refusal paths."""

import json

from click.testing import CliRunner

from zastava.cli import main
from zastava.series import parse_table


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_z_json_matches_library_table():
    result = run("z", "--type", "A1", "--cap", "3")
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert obj["algebra"] == "A1"
    assert obj["cap"] == 3
    values = {tuple(i["content"]): i["value"] for i in obj["entries"]}
    assert values[(0,)] == "(1) / (1)"
    assert values[(1,)] == "(1) / (a1*h + h^2)"
    assert values[(2,)] == "(1) / (2*a1^2*h^2 + 6*a1*h^3 + 4*h^4)"


def test_z_cap_zero_single_entry():
    result = run("z", "--type", "A2", "--cap", "0")
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert obj["entries"] == [{"content": [0, 0], "value": "(1) / (1)"}]


def test_z_csv_affine_annotations():
    result = run("z", "--type", "A1~", "--cap", "2", "--format", "csv")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "content,d,finite_content,value"
    assert any(line.startswith("1 1,1,0,") for line in lines)


def test_out_writes_file(tmp_path):
    path = tmp_path / "table.json"
    result = run("z", "--type", "A2", "--cap", "2", "--out", str(path))
    assert result.exit_code == 0
    assert result.output == ""
    table = parse_table(path.read_text())
    assert table.algebra.label == "A2"
    assert table.cap == 2


def test_jfun_prefactor_tag():
    result = run("jfun", "--type", "A1", "--cap", "2")
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert obj["metadata"] == {"prefactor": "q^(a/hbar)"}
    csv_result = run("jfun", "--type", "A2", "--cap", "2", "--format", "csv")
    assert csv_result.exit_code == 0
    assert csv_result.output.splitlines()[0] == "prefactor,q^(a/hbar)"


def test_usage_refusals():
    assert run("z", "--type", "nope", "--cap", "1").exit_code == 2
    assert run("z", "--type", "A2~", "--cap", "1").exit_code == 2
    assert run("jfun", "--type", "A1~", "--cap", "1").exit_code == 2
    assert run("verify").exit_code == 2
    assert run("z", "--type", "A1", "--cap", "-1").exit_code == 2
    # unknown --format values are rejected by the option parser
    assert run("z", "--type", "A1", "--cap", "1", "--format", "xml").exit_code == 2


def test_resource_refusals():
    assert run("z", "--type", "A1", "--cap", "17").exit_code == 3
    assert run("z", "--type", "A1~", "--cap", "9").exit_code == 3


def test_verify_small_finite_and_affine():
    ok = run("verify", "--type", "B2", "--cap", "3")
    assert ok.exit_code == 0, ok.output
    assert "all checks passed" in ok.output
    ok_affine = run("verify", "--type", "A1~", "--cap", "2")
    assert ok_affine.exit_code == 0, ok_affine.output


def test_verify_table_round_trip(tmp_path):
    emitted = run("z", "--type", "A2", "--cap", "2")
    path = tmp_path / "t.json"
    path.write_text(emitted.output)
    assert run("verify", "--table", str(path)).exit_code == 0
    # malformed file is a usage error
    bad = tmp_path / "bad.json"
    bad.write_text("{\"algebra\": \"A2\"}")
    assert run("verify", "--table", str(bad)).exit_code == 2
    missing = tmp_path / "missing.json"
    assert run("verify", "--table", str(missing)).exit_code == 2


def test_seed_changes_nothing_in_output():
    a = run("z", "--type", "A2", "--cap", "2", "--seed", "1")
    b = run("z", "--type", "A2", "--cap", "2", "--seed", "99")
    assert a.output == b.output
