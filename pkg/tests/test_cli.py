import json
import subprocess
import sys

import pytest

from finitetc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "sphere:1", "--format", "json")
    info = json.loads(out)
    assert code == 0
    assert info["elements"] == 4 and info["connected"] and info["core_size"] == 4
    assert not info["contractible"]
    code, out, _ = run(capsys, "info", "chain:3")
    assert "contractible: True" in out


def test_malformed_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("elements: a b\na < z\n")
    code, _, err = run(capsys, "info", str(bad))
    assert code == 1 and "line 2" in err and "column 5" in err
    code, _, err = run(capsys, "cat", "nonsense:1")
    assert code == 1


def test_cc_values_and_exit_codes(capsys):
    code, out, _ = run(capsys, "cc", "--n", "2", "sphere:1", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["value"] == 4 and rep["certified"] == "exact"
    assert "elapsed_ms" not in rep
    code, out, _ = run(capsys, "cc", "--n", "2", "--m", "0", "sphere:1", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["value"] == "infinity" and rep["certified"] == "exact"
    code, out, _ = run(capsys, "ccinf", "--n", "2", "--k-max", "2", "sphere:1", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["value"] == 2 and len(rep["cover"]) == 2
    code, out, _ = run(capsys, "cat", "sphere:1", "--timing", "--format", "json")
    assert json.loads(out)["value"] == 2 and "elapsed_ms" in json.loads(out)


def test_witness_emission(capsys):
    code, out, _ = run(capsys, "cc", "--n", "2", "--m", "2", "sphere:1", "--emit-witness", "--format", "json")
    rep = json.loads(out)
    assert len(rep["witnesses"]) == len(rep["cover"]) == rep["value"]
    assert all(w["variant"] == "wedge" and w["m"] == 2 for w in rep["witnesses"])


def test_budget_exhaustion_exit_code(capsys):
    code, out, _ = run(capsys, "cck", "--k", "1", "sphere:1", "--budget-seconds", "1e-9", "--format", "json")
    rep = json.loads(out)
    assert code == 2 and rep["certified"] == "upper_bound_at_budget"


def test_argument_validation(capsys):
    with pytest.raises(SystemExit):
        main(["cc", "--n", "1", "sphere:1"])
    with pytest.raises(SystemExit):
        main(["cck", "sphere:1"])
    with pytest.raises(SystemExit):
        main(["cc", "--budget-nodes", "0", "sphere:1"])


def test_sc_of_simplex(capsys, tmp_path):
    code, out, _ = run(capsys, "sc", "--n", "3", "--k-max", "1", "simplex:2", "--format", "json")
    rep = json.loads(out)
    assert rep["invariant"] == "sc_n" and rep["value"] == 1 and code == 0
    f = tmp_path / "k.json"
    f.write_text(json.dumps({"facets": [["a", "b"], ["b", "c"]]}))
    code, out, _ = run(capsys, "sc", str(f), "--format", "json")
    assert json.loads(out)["value"] == 1


def test_verify_output_is_deterministic_across_jobs(capsys):
    args = ["verify", "corollaries", "--random", "4", "--max-size", "4", "--seed", "7", "--format", "json"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args, "--jobs", "2")
    assert code1 == code2 == 0
    assert out1 == out2
    props = json.loads(out1)[0]["properties"]
    assert all(not p["violations"] for p in props)


def test_json_is_byte_identical_across_runs(capsys):
    outs = {run(capsys, "cc", "--n", "2", "sphere:1", "--format", "json", "--emit-witness")[1] for _ in range(2)}
    assert len(outs) == 1


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "finitetc.cli", "info", "chain:1"], capture_output=True, text=True)
    assert res.returncode == 0 and "elements: 1" in res.stdout
