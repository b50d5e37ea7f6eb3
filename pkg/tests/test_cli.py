import json
import subprocess
import sys

import pytest

from kncross.canonical import canonical_matrix
from kncross.cli import main
from kncross.io import load_diagram
from kncross.rerouted import build_dprime


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_zvalue(capsys):
    assert run(capsys, "zvalue", "--n", "13") == (0, "225\n", "")


def test_zvalue_json(capsys):
    code, out, _ = run(capsys, "zvalue", "--n", "13", "--json")
    assert json.loads(out) == {"schema": 1, "command": "zvalue", "n": 13, "z": 225}


def test_unknown_flag(capsys):
    code, _, err = run(capsys, "zvalue", "--n", "5", "--bogus")
    assert code == 2 and "bogus" in err


def test_domain_error_exit(capsys):
    code, _, err = run(capsys, "verify-theorem1", "--n", "7")
    assert code == 2 and "error" in err


def test_verify_rerouted(capsys):
    code, out, _ = run(capsys, "verify-theorem1", "--n", "9")
    assert code == 0
    assert "PASS" in out and out.count("[ok]") == 3


def test_verify_rerouted_json(capsys):
    code, out, _ = run(capsys, "verify-theorem1", "--n", "11", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"] is True


def test_search_exhaustive(capsys):
    assert run(capsys, "search", "--n", "5", "--mode", "exhaustive")[:2] == (0, "1\n")


def test_search_anneal_json_reproducible(capsys):
    argv = ["search", "--n", "9", "--mode", "anneal", "--steps", "3000", "--restarts", "2", "--seed", "3", "--json"]
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    assert a == b
    data = json.loads(a[1])
    assert data["best_value"] == data["z"] == 36 and a[0] == 0


def test_search_cap(capsys):
    assert run(capsys, "search", "--n", "9")[0] == 2


def test_cross_index(capsys):
    code, out, _ = run(capsys, "cross-index", "--canonical", "9")
    assert code == 0 and "epsilon=36" in out
    code, out, _ = run(capsys, "cross-index", "--dprime", "9", "--per-edge", "--json")
    data = json.loads(out)
    assert data["total"] == 36 and {"count": 1, "edge": [1, 2]} in data["per_edge"]


def test_canonical_and_matrix_file(capsys, tmp_path):
    path = tmp_path / "m13.txt"
    assert run(capsys, "canonical", "--n", "13", "--out", str(path))[0] == 0
    assert load_diagram(path) == canonical_matrix(13)
    code, out, _ = run(capsys, "cross-index", "--matrix", str(path))
    assert "epsilon=225" in out


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "cross-index", "--matrix", str(tmp_path / "nope.txt"))[0] == 2


def test_dprime_out(capsys, tmp_path):
    path = tmp_path / "d.json"
    code, _, _ = run(capsys, "dprime", "--n", "9", "--out", str(path), "--check")
    assert code == 0
    assert load_diagram(path) == build_dprime(9)
    code, out, _ = run(capsys, "free-cycles", "--diagram", str(path))
    assert out == "NONE\n"


def test_free_cycles_dprime7(capsys):
    code, out, _ = run(capsys, "free-cycles", "--dprime", "7", "--json")
    assert json.loads(out)["cycle"] is not None


def test_verify_blocks_sweep(capsys):
    code, out, _ = run(capsys, "verify-blocks", "--sweep", "8..12", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["reports"]) == 5 and data["passed"]
    assert run(capsys, "verify-blocks", "--sweep", "8-12")[0] == 2


def test_witness7(capsys):
    code, out, _ = run(capsys, "witness7")
    assert code == 0 and "total 9" in out
    code, out, _ = run(capsys, "witness7", "--n", "5", "--json")
    assert code == 1 and json.loads(out)["found"] is False


def test_render(capsys, tmp_path):
    path = tmp_path / "d.svg"
    assert run(capsys, "render", "--dprime", "9", "--out", str(path))[0] == 0
    assert path.read_text().startswith("<?xml")


@pytest.mark.parametrize("argv", [
    ["cross-index", "--dprime", "11", "--json", "--per-edge"],
    ["verify-theorem1", "--n", "9", "--json"],
    ["search", "--n", "7", "--json"],
    ["witness7", "--json"],
])
def test_json_byte_identical_across_processes(argv):
    outs = [
        subprocess.run([sys.executable, "-m", "kncross", *argv], capture_output=True, check=False).stdout
        for _ in range(2)
    ]
    assert outs[0] == outs[1] and outs[0]
    json.loads(outs[0])
