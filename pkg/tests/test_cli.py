import json
import subprocess
import sys

import pytest

from graphcx import cli
from graphcx.exactla import SparseMatrix


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_homology_table(capsys):
    code, out, _ = run(capsys, "homology", "--variant", "commutative", "--rank", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)["homology"]
    assert {r["degree"]: r["betti"] for r in rows} == {1: 0, 2: 1}


def test_polygon_table(capsys):
    code, out, _ = run(capsys, "homology", "--variant", "polygon", "--format", "json")
    assert code == 0
    betti = {r["degree"]: r["betti"] for r in json.loads(out)["homology"]}
    assert [k for k, b in betti.items() if b] == [3, 7, 11]


def test_degree_filter(capsys):
    code, out, _ = run(capsys, "enumerate", "--variant", "associative", "--rank", "2", "--degree", "2",
                       "--format", "json")
    assert code == 0
    (m,) = json.loads(out)["manifests"]
    assert m["degree"] == 2 and len(m["basis"]) == 3
    assert {json.dumps(row["surface"], sort_keys=True) for row in m["basis"]} == \
        {'{"b": 3, "g": 0}', '{"b": 1, "g": 1}'}


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "homology", "--rank", "4")[0] == cli.EXIT_CAP
    assert run(capsys, "homology", "--rank", "3", "--max-half-edges", "8")[0] == cli.EXIT_CAP
    assert run(capsys, "homology", "--config", str(tmp_path / "missing.json"))[0] == cli.EXIT_IO
    bad = tmp_path / "bad.json"
    bad.write_text('{"colour": 1}')
    assert run(capsys, "homology", "--config", str(bad))[0] == cli.EXIT_CONFIG
    bad.write_text("not json")
    assert run(capsys, "homology", "--config", str(bad))[0] == cli.EXIT_CONFIG
    assert run(capsys, "export")[0] == cli.EXIT_CONFIG
    assert run(capsys, "frobnicate")[0] == cli.EXIT_CONFIG
    assert run(capsys, "homology", "--rank", "x")[0] == cli.EXIT_CONFIG


def test_config_file_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"variant": "forested", "rank": "2", "format": "json"}))
    code, out, _ = run(capsys, "homology", "--config", str(cfg))
    assert code == 0
    rows = json.loads(out)["homology"]
    assert rows[0]["variant"] == "forested"
    code, out, _ = run(capsys, "homology", "--config", str(cfg), "--variant", "commutative")
    assert json.loads(out)["homology"][0]["variant"] == "commutative"


def test_config_hash_ignores_output_dir(capsys, tmp_path):
    _, a, _ = run(capsys, "enumerate", "--rank", "2", "--out", str(tmp_path / "a"), "--format", "json")
    _, b, _ = run(capsys, "enumerate", "--rank", "2", "--out", str(tmp_path / "b"), "--format", "json")
    _, c, _ = run(capsys, "enumerate", "--rank", "2", "--seed", "5", "--format", "json")
    ha, hb, hc = (json.loads(x)["config_hash"] for x in (a, b, c))
    assert ha == hb != hc


def test_export_is_deterministic(capsys, tmp_path):
    for d in ("one", "two"):
        code, _, _ = run(capsys, "export", "--variant", "forested", "--rank", "2-3", "--out", str(tmp_path / d))
        assert code == 0
    one = sorted(p.name for p in (tmp_path / "one").iterdir())
    two = sorted(p.name for p in (tmp_path / "two").iterdir())
    assert one == two
    assert "d_forested_r3_k4.txt" in one and "basis_forested_r3_k4.json" in one
    for name in one:
        assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()


def test_exported_matrix_matches_manifests(capsys, tmp_path):
    run(capsys, "boundary", "--variant", "commutative", "--rank", "3", "--out", str(tmp_path))
    d = SparseMatrix.from_text((tmp_path / "d_commutative_r3_k4.txt").read_text())
    src = json.loads((tmp_path / "basis_commutative_r3_k4.json").read_text())
    tgt = json.loads((tmp_path / "basis_commutative_r3_k3.json").read_text())
    assert d.shape == (len(tgt["basis"]), len(src["basis"]))


def test_verify_suite(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suite", "sp", "--out", str(tmp_path))
    assert code == 0
    assert out.count("PASS") == 2
    report = json.loads((tmp_path / "verify_sp.json").read_text())
    assert report["passed"]


def test_surfaces_verb(capsys):
    code, out, _ = run(capsys, "surfaces", "--rank", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)["surfaces"]
    assert {(r["surface"]["g"], r["surface"]["b"]) for r in rows} == {(0, 3), (1, 1)}


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "graphcx", "homology", "--rank", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("config ")


@pytest.mark.parametrize("text,want", [("2", [2]), ("1-3", [1, 2, 3]), ("1,4", [1, 4]), (None, [])])
def test_parse_range(text, want):
    assert cli.parse_range(text) == want
