import json

import pytest

from affschur import cli

CROSS = '{"n": 2, "entries": [[1, 2, 1], [2, 1, 1]]}'
DIAG = '{"n": 2, "entries": [[1, 1, 1], [2, 2, 1]]}'
SEG = '{"n": 2, "entries": [[1, 2, 1]]}'


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kl_diagonal(capsys):
    code, out, _ = run(capsys, "kl", "--r", "2", "--y", "2,1", "--w", "2,1")
    assert code == 0
    report = json.loads(out)
    assert report["P"] == ["1"]


def test_kl_rejects_bad_window(capsys):
    code, _, err = run(capsys, "kl", "--r", "2", "--y", "2,x", "--w", "2,1")
    assert code == 2
    assert "window" in err


def test_kl_rejects_window_length(capsys):
    code, _, err = run(capsys, "kl", "--r", "3", "--y", "2,1", "--w", "2,1")
    assert code == 2
    assert "window length" in err


def test_theta_worked_report(capsys):
    code, out, _ = run(
        capsys, "theta", "--n", "2", "--r", "2", "--a", CROSS
    )
    assert code == 0
    report = json.loads(out)
    assert len(report["theta"]) == 2
    coeffs = {
        tuple(tuple(e) for e in mat["entries"]): dict(
            (exp, c) for exp, c in val
        )
        for mat, val in report["theta"]
    }
    assert coeffs[((1, 1, 1), (2, 2, 1))] == {-1: "1"}
    assert coeffs[((1, 2, 1), (2, 1, 1))] == {0: "1"}


def test_theta_sigma_mismatch(capsys):
    code, _, err = run(capsys, "theta", "--n", "2", "--r", "3", "--a", CROSS)
    assert code == 2
    assert "sigma" in err


def test_theta_rejects_small_rank(capsys):
    code, _, err = run(capsys, "theta", "--n", "1", "--r", "2", "--a", CROSS)
    assert code == 2
    assert "n must be" in err


def test_theta_rejects_negative_entry(capsys):
    bad = '{"n": 2, "entries": [[1, 2, -1]]}'
    code, _, err = run(capsys, "theta", "--n", "2", "--r", "2", "--a", bad)
    assert code == 2
    assert "negative" in err


def test_theta_rejects_malformed_json(capsys):
    code, _, err = run(capsys, "theta", "--n", "2", "--r", "2", "--a", "{oops")
    assert code == 2
    assert "JSON" in err


def test_mult_bracket_product(capsys):
    code, out, _ = run(
        capsys, "mult", "--n", "2", "--r", "2", "--a", CROSS, "--b", CROSS
    )
    assert code == 0
    report = json.loads(out)
    assert report["basis"] == "bracket"
    assert len(report["product"]) == 2


def test_mult_theta_basis(capsys):
    code, out, _ = run(
        capsys,
        "mult",
        "--n", "2", "--r", "2",
        "--a", CROSS, "--b", CROSS,
        "--basis", "theta",
    )
    assert code == 0
    json.loads(out)


def test_g_table_report(capsys):
    code, out, _ = run(
        capsys, "g-table", "--n", "2", "--r", "2", "--a", CROSS, "--b", CROSS
    )
    assert code == 0
    report = json.loads(out)
    assert report["kind"] == "g"
    assert len(report["entries"]) == 1


def test_f_table_report(capsys):
    code, out, _ = run(
        capsys, "f-table", "--n", "2", "--a", SEG, "--b", SEG
    )
    assert code == 0
    report = json.loads(out)
    assert report["kind"] == "f"
    assert len(report["entries"]) == 1


def test_f_table_rejects_diagonal_input(capsys):
    code, _, err = run(capsys, "f-table", "--n", "2", "--a", DIAG, "--b", SEG)
    assert code == 2
    assert "upper" in err


def test_h_table_report(capsys):
    code, out, _ = run(
        capsys, "h-table", "--n", "2", "--a", CROSS, "--b", CROSS
    )
    assert code == 0
    report = json.loads(out)
    assert report["kind"] == "h"
    assert len(report["entries"]) == 2


def test_hall_report(capsys):
    two = '{"n": 2, "entries": [[1, 2, 2]]}'
    code, out, _ = run(
        capsys, "hall", "--n", "2", "--a", SEG, "--b", SEG, "--c", two
    )
    assert code == 0
    report = json.loads(out)
    assert report["phi"] == ["1", "1"]


def test_verify_fast_target(capsys):
    code, out, _ = run(capsys, "verify", "lemma-3.7", "--n", "2", "--r", "2")
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert report["violations"] == []


def test_verify_unknown_target(capsys):
    code, _, err = run(capsys, "verify", "lemma-9.9")
    assert code == 2
    assert "unknown verification target" in err


def test_reports_are_deterministic(capsys):
    _, out1, _ = run(
        capsys, "g-table", "--n", "2", "--r", "2", "--a", CROSS, "--b", CROSS
    )
    _, out2, _ = run(
        capsys, "g-table", "--n", "2", "--r", "2", "--a", CROSS, "--b", CROSS
    )
    assert out1 == out2


def test_out_file_and_cache(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    cache_path = tmp_path / "kl.txt"
    code = cli.main(
        [
            "theta",
            "--n", "2", "--r", "2",
            "--a", CROSS,
            "--out", str(out_path),
            "--cache", str(cache_path),
        ]
    )
    capsys.readouterr()
    assert code == 0
    assert json.loads(out_path.read_text())["command"] == "theta"
    assert cache_path.exists()


def test_matrix_from_file(tmp_path, capsys):
    mat_path = tmp_path / "a.json"
    mat_path.write_text(CROSS)
    code, out, _ = run(
        capsys, "theta", "--n", "2", "--r", "2", "--a", str(mat_path)
    )
    assert code == 0
    json.loads(out)


def test_missing_matrix_file(capsys):
    code, _, err = run(
        capsys, "theta", "--n", "2", "--r", "2", "--a", "/no/such/file.json"
    )
    assert code == 2
    assert "not found" in err
