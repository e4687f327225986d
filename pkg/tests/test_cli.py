import json
import subprocess
import sys

import pytest

from rootdeform.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main

from reference_values import SIGMA_TILDE

EXAMPLE = ["--minus", "3,5,7", "--plus", "2,4,6,8"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_show_element_json(capsys):
    code, out, _ = run(capsys, "show-element", *EXAMPLE, "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["matrix"] == SIGMA_TILDE and data["order"] == 8


def test_show_element_word_not_factorized(capsys):
    code, out, _ = run(capsys, "show-element", "--word", "2,3")
    assert code == EXIT_OK
    assert "order: 3" in out and "minus factor" not in out


def test_order(capsys):
    assert run(capsys, "order", "--word", "3,5,7,2,4,6,8") == (EXIT_OK, "8\n", "")
    code, out, _ = run(capsys, "order", "--minus", "1,3,5,7", "--plus", "2,4,6,8", "--json")
    assert json.loads(out) == {"order": 30}


def test_theta_text_and_roots(capsys):
    code, out, _ = run(capsys, "theta", *EXAMPLE, "--roots")
    assert code == EXIT_OK
    assert "-1 + 2c - 2iκ" in out
    assert "α̃5 =" in out


def test_theta_numeric_json(capsys):
    code, out, _ = run(capsys, "theta", *EXAMPLE, "--epsilon", "1", "--json")
    data = json.loads(out)
    assert data["numeric"][0][0] == [1.0, 0.0]
    assert len(data["theta"]) == 8


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", *EXAMPLE)
    assert code == EXIT_OK and "FAIL" not in out


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", *EXAMPLE, "--variant", "literal")
    assert code == EXIT_FAIL and "FAIL" in out


def test_orbits_pretty(capsys):
    code, out, _ = run(capsys, "orbits", *EXAMPLE, "--pretty")
    lines = out.splitlines()
    cells = {n: [c.strip() for c in lines[n].split("|")] for n in (1, 3, 4)}
    assert cells[1][4] == "2;3;4;5;6"
    assert cells[3][1] == "1;2;3²;4³;5²;6²;7;8"
    assert cells[4][2] == "-8"
    assert "64 distinct" in out


def test_orbits_json(capsys):
    code, out, _ = run(capsys, "orbits", *EXAMPLE, "--json")
    assert json.loads(out)["distinct"] == 64


def test_invariance(capsys):
    code, out, _ = run(capsys, "invariance", *EXAMPLE, "--epsilon", "1.0")
    assert code == EXIT_OK
    assert "σ̃- α2 = 2;3  [σ̃^3 α8]" in out
    assert "distinct roots: 64" in out


def test_invariance_failure(capsys):
    code, out, _ = run(capsys, "invariance", "--minus", "1,3,7", "--plus", "2,4,6,8", "--json")
    assert code == EXIT_FAIL
    assert json.loads(out)["invariant"] is False


def test_scan_small_system(capsys, tmp_path):
    code, out, _ = run(capsys, "scan", "--system", "A3", "--json")
    assert code == EXIT_OK and len(out.splitlines()) == 8
    path = tmp_path / "scan.jsonl"
    code, summary, _ = run(capsys, "scan", "--system", "A3", "--out", str(path))
    assert path.read_text() == out
    assert "candidates: 8" in summary


def test_export(capsys, tmp_path):
    path = tmp_path / "exp.json"
    code, out, _ = run(capsys, "export", *EXAMPLE, "--epsilon", "1", "--out", str(path),
                       "--sample-q", "0.3,1.1,-0.7,0.5,1.9,-1.3,0.2,0.8")
    assert code == EXIT_OK and "64" in out
    data = json.loads(path.read_text())
    assert len(data["roots"]) == 64 and "potential" in data


def test_export_toda(capsys):
    code, out, _ = run(capsys, "export", *EXAMPLE, "--model", "toda")
    assert len(json.loads(out)["simple_roots"]) == 8


def test_out_file(capsys, tmp_path):
    path = tmp_path / "order.txt"
    code, out, _ = run(capsys, "order", *EXAMPLE, "--out", str(path))
    assert out == "" and path.read_text() == "8\n"


def test_custom_cartan_file(capsys, tmp_path):
    path = tmp_path / "g2.json"
    path.write_text(json.dumps({"cartan": [[2, -1], [-3, 2]]}))
    code, out, _ = run(capsys, "order", "--cartan-file", str(path), "--minus", "1", "--plus", "2")
    assert (code, out) == (EXIT_OK, "6\n")


@pytest.mark.parametrize("argv", [
    ["verify"],
    ["verify", "--word", "3,5", "--minus", "3"],
    ["verify", "--minus", "2"],
    ["verify", "--minus", "1,3,5,7", "--plus", "2,4,6,8"],
    ["order", "--system", "Q7", "--word", "1"],
    ["order", "--word", "9"],
    ["order", "--cartan-file", "/nonexistent.json", "--word", "1"],
    ["orbits", "--word", "2,3", "--minus", "3,4"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_USAGE and out == "" and "error" in err


def test_argparse_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["order", "--minus", "a,b"])
    assert exc.value.code == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rootdeform", "order", "--word", "3,5,7,2,4,6,8"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "8\n"
