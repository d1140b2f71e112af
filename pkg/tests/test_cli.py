import json

import pytest

from chebsig.cli import main


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_nodes_writes_layout(tmp_path, capsys):
    code = main(["nodes", "--n", "20", "--out", str(tmp_path)])
    assert code == 0
    report = json.loads((tmp_path / "nodes" / "report.json").read_text())
    assert set(report["series_files"]) >= {"node_tables.csv"}
    for fname in report["series_files"]:
        assert (tmp_path / "nodes" / fname).exists()
    assert "compare_max_diff" in capsys.readouterr().out


def test_gamma_check_passes(capsys):
    assert main(["gamma", "--noise", "on", "--seed", "3", "--check"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out


def test_scale_check_passes():
    assert main(["scale", "--check"]) == 0


def test_bad_value_is_usage_error(capsys):
    assert main(["filter", "--window", "0"]) == 2
    assert "window" in capsys.readouterr().err


def test_io_error_exit_code(tmp_path):
    target = tmp_path / "blocked"
    target.write_text("a file, not a directory")
    assert main(["nodes", "--out", str(target / "sub")]) == 3


def test_svg_written(tmp_path):
    assert main(["deviation", "--out", str(tmp_path), "--svg"]) == 0
    assert (tmp_path / "deviation" / "deviation.svg").exists()


def test_coeffs_all_runs_three(tmp_path):
    assert main(["coeffs", "--out", str(tmp_path)]) == 0
    for name in ("coeffs_atan", "coeffs_tanh_sum", "coeffs_stripe"):
        assert (tmp_path / name / "report.json").exists()


def test_run_all_deterministic_csv_bytes(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(["run-all", "--seed", "42", "--out", str(out1)]) == 0
    assert main(["run-all", "--seed", "42", "--out", str(out2)]) == 0
    csv1 = sorted(p.relative_to(out1) for p in out1.rglob("*.csv"))
    csv2 = sorted(p.relative_to(out2) for p in out2.rglob("*.csv"))
    assert csv1 == csv2 and len(csv1) > 25
    for rel in csv1:
        assert (out1 / rel).read_bytes() == (out2 / rel).read_bytes(), rel
