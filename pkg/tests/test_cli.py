import json
import shutil
import subprocess

import pytest

from dpzoo.cli import main

from importlib import resources


def run_cli(*argv):
    import io
    from contextlib import redirect_stderr, redirect_stdout

    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_verify_single_entry_passes():
    code, out, _ = run_cli("table", "verify", "--entry", "d4-D5")
    assert code == 0
    assert "1/1 entries pass" in out


def test_verify_unknown_entry_exits_2():
    code, _, err = run_cli("table", "verify", "--entry", "bogus")
    assert code == 2
    assert "bogus" in err


def test_verify_all_entries_pass():
    code, out, _ = run_cli("table", "verify")
    assert code == 0
    assert "53/53 entries pass" in out


def test_output_is_deterministic():
    runs = [run_cli("table", "verify", "--json") for _ in range(2)]
    assert runs[0] == runs[1]
    info_runs = [run_cli("info", "d3-3A2") for _ in range(2)]
    assert info_runs[0] == info_runs[1]


def test_info_reports_torsion():
    code, out, _ = run_cli("info", "d3-3A2")
    assert code == 0
    record = json.loads(out)
    assert record["class_group"]["torsion"] == [3]
    assert record["type"] == "3A2"


def test_graph_dot_output():
    code, out, _ = run_cli("graph", "d7", "--dot")
    assert code == 0
    assert out.count("shape=point") == 2
    assert out.count("shape=circle") == 1
    assert out.count(" -- ") == 2


def test_graph_json_output():
    code, out, _ = run_cli("graph", "d1-E7-A1")
    assert code == 0
    data = json.loads(out)
    assert any(m == 2 for _, _, m in data["edges"])


def test_enumerate_degree6():
    code, out, _ = run_cli("enumerate", "--degree", "6")
    assert code == 0
    assert "6 orbit(s)" in out


def test_enumerate_bad_degree():
    code, _, err = run_cli("enumerate", "--degree", "12")
    assert code == 2


def test_corollaries_pass():
    code, out, _ = run_cli("corollaries")
    assert code == 0
    assert "FAIL" not in out


def test_poly_check_entry():
    code, out, _ = run_cli("poly-check", "d3-E6")
    assert code == 0


def test_corrupted_data_fails_verification(tmp_path):
    data = tmp_path / "data"
    shutil.copytree(str(resources.files("dpzoo").joinpath("data")), data)
    entries = json.loads((data / "entries.json").read_text())
    for rec in entries:
        if rec["id"] == "d4-D5":
            rec["num_lines"] = 2  # wrong on purpose
    (data / "entries.json").write_text(json.dumps(entries))
    code, out, _ = run_cli(
        "--data-dir", str(data), "table", "verify", "--entry", "d4-D5"
    )
    assert code == 1
    assert "FAIL" in out


def test_data_dir_env_override(tmp_path, monkeypatch):
    data = tmp_path / "data"
    shutil.copytree(str(resources.files("dpzoo").joinpath("data")), data)
    monkeypatch.setenv("DPZOO_DATA", str(data))
    code, out, _ = run_cli("info", "d7")
    assert code == 0
    assert json.loads(out)["id"] == "d7"
    monkeypatch.setenv("DPZOO_DATA", str(tmp_path / "missing"))
    code, _, err = run_cli("info", "d7")
    assert code == 2


def test_console_script_installed():
    exe = shutil.which("dpzoo")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run(
        [exe, "info", "d7"], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["type"] == "A1"


def test_parallel_flag():
    code, out, _ = run_cli("table", "verify", "--parallel", "4")
    assert code == 0
    assert "53/53 entries pass" in out
