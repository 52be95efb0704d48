import json
import subprocess
import sys

import pytest

from gwablocks.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_block_sl2(capsys):
    code, out, _ = run(capsys, "block", "--preset", "sl2", "--weight", "0")
    assert code == 0
    assert "block of size 2" in out
    assert "-2 < 0" in out


def test_block_json(capsys):
    code, doc = run_json(capsys, "block", "--preset", "quadratic", "--weight", "0")
    assert code == 0
    assert doc["schema_version"] == 1 and doc["command"] == "block"
    b = doc["report"]["block"]
    assert b["n"] == 3 and b["weights"] == [3, 1, 0]
    assert doc["report"]["verma_singular_degrees"] == [1, 3]


def test_block_quantum_default_weight(capsys):
    code, out, _ = run(capsys, "block", "--preset", "quantum")
    assert code == 0 and "2 < 1" in out


def test_block_from_config(capsys, tmp_path):
    cfg = tmp_path / "sl2.cfg"
    cfg.write_text("# sl2 again\nkind = polyshift\nr = 1\ngamma = -2\nz0 = 0 1\nz1 = 1\nweight = 3\n")
    code, doc = run_json(capsys, "block", "--config", str(cfg))
    assert code == 0
    assert doc["report"]["block"]["n"] == 2


def test_bad_config(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("z0 1 2\n")
    code, _, err = run(capsys, "block", "--config", str(cfg))
    assert code == 1 and "malformed" in err


def test_block_needs_data(capsys):
    assert run(capsys, "block")[0] == 1


def test_dims_text(capsys):
    code, out, _ = run(capsys, "dims", "--n", "3", "--ext", "L1", "L2", "1", "--hom", "P1/P3", "P2/P4")
    assert code == 0
    assert "dim Ext^1(L1, L2) = 1" in out
    assert "dim Hom(P1/P3, P2) = 2" in out


def test_dims_unsupported_and_oracle(capsys):
    code, doc = run_json(capsys, "dims", "--n", "3", "--ext", "M3/M1", "L2", "1")
    assert code == 0
    row = doc["report"]["results"][0]
    assert row["value"] == "unsupported" and row["source"] == "unsupported"
    code, doc = run_json(capsys, "dims", "--n", "3", "--ext", "M3/M1", "L2", "1", "--oracle")
    row = doc["report"]["results"][0]
    assert row["source"] == "oracle" and isinstance(row["value"], int)


def test_dims_table(capsys):
    code, doc = run_json(capsys, "dims", "--n", "2", "--table", "0")
    table = doc["report"]["results"][0]
    assert len(table["matrix"]) == len(table["objects"])


def test_dims_mult(capsys):
    code, doc = run_json(capsys, "dims", "--n", "3", "--mult", "P1/P4")
    assert doc["report"]["results"][0]["value"] == [3, 2, 1]


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--n", "2")
    assert code == 0 and "koszul: true" in out
    code, doc = run_json(capsys, "hilbert", "--n", "2")
    # polynomials are ascending coefficient lists
    assert doc["report"]["H_A"][0][0] == [1, 0, 1]


def test_submodules(capsys):
    code, doc = run_json(capsys, "submodules", "--n", "5", "--object", "P3/P6")
    assert code == 0
    assert doc["report"]["count"] == 26 == doc["report"]["expected"]


def test_submodules_refusals(capsys):
    assert run(capsys, "submodules", "--n", "5", "--object", "P3/P6", "--field", "Q")[0] == 3
    assert run(capsys, "submodules", "--n", "5", "--object", "P1/P6", "--ceiling", "10")[0] == 3


def test_tableau_outputs(capsys):
    assert run(capsys, "tableau", "--psi", "5,3,2")[1].strip() == "5\n432\n321\n21\n1"
    assert run(capsys, "tableau", "--skew", "6,4,3,2 / 4,3")[1].strip() == "6\n5432\n::21\n::1"
    assert run(capsys, "tableau", "--object", "T3")[1].strip() == "321\n21\n1"
    assert run(capsys, "tableau", "--object", "M3", "--n", "3", "--transpose")[1].strip() == "321"


def test_tableau_pair(capsys):
    code, doc = run_json(capsys, "tableau", "--pair", "P1/P3", "P2/P4", "--n", "4")
    rep = doc["report"]
    assert len(rep["maps"]) == 2 and rep["formula_hom"] == 2
    assert sorted(m["manhattan_degree"] for m in rep["maps"]) == [1, 3]
    assert rep["extensions"] == [] and rep["formula_ext1"] == 1


@pytest.mark.parametrize("argv", [
    ["tableau", "--psi", "2,3"],
    ["tableau"],
    ["dims", "--n", "3", "--hom", "Q9", "L1"],
    ["dims", "--n", "3"],
    ["dims", "--n", "3", "--ext", "L1", "L9", "1"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_argparse_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as e:
        main(["dims", "--format", "yaml"])
    assert e.value.code == 1


def test_verify_formulas_and_oracle(capsys):
    assert run(capsys, "verify", "--scope", "formulas", "--n-max", "6")[0] == 0
    assert run(capsys, "verify", "--scope", "oracle", "--n-max", "3")[0] == 0


def test_verify_styt_reports_counterexamples(capsys):
    code, doc = run_json(capsys, "verify", "--scope", "styt", "--n-max", "4")
    assert code == 2
    checks = {c["name"]: c for c in doc["report"]["checks"]}
    failed = [c for c in checks.values() if c["status"] == "fail"]
    assert [c["name"] for c in failed] == ["tableau Ext^1 conformance"]
    assert failed[0]["counterexamples"]
    assert all(c["status"] == "pass" for c in checks.values() if c is not failed[0])


def test_json_is_deterministic():
    argv = [sys.executable, "-m", "gwablocks", "verify", "--scope", "formulas", "--n-max", "4", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b
    assert json.loads(a)["schema_version"] == 1
