import io
import sys

import pytest

from domlab import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gamma_family(capsys):
    code, out, _ = run(["gamma", "--family", "prism:cycle:6", "--k", "2",
                        "--variant", "restrained"], capsys)
    assert code == 0
    assert "gamma = 8" in out


def test_gamma_certificate_one_based(capsys):
    code, out, _ = run(["gamma", "--family", "complete:6", "--certificate"],
                       capsys)
    assert code == 0
    assert "{1, 2}" in out


def test_gamma_infeasible_exit_2(capsys):
    code, out, _ = run(["gamma", "--family", "cycle:5", "--k", "3"], capsys)
    assert code == 2
    assert "infeasible" in out


def test_domatic(capsys):
    code, out, _ = run(["domatic", "--family", "complete:6"], capsys)
    assert code == 0 and "domatic = 3" in out
    code, out, _ = run(["domatic", "--family", "cycle:5", "--k", "2"], capsys)
    assert code == 0 and "domatic = 1" in out


def test_construct_petersen(capsys, tmp_path):
    out_file = tmp_path / "g.edges"
    code, _, _ = run(["construct", "prism:cycle:5", "-o", str(out_file)],
                     capsys)
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines[0] == "10 15"
    assert len(lines) == 16


def test_usage_error_exit_1(capsys):
    code, _, err = run(["gamma", "--family", "bogus:9"], capsys)
    assert code == 1
    assert "bogus" in err
    code, _, _ = run(["gamma"], capsys)
    assert code == 1


def test_gamma_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("4 4\n0 1\n1 2\n2 3\n3 0\n"))
    code, out, _ = run(["gamma", "--input", "-", "--k", "1"], capsys)
    assert code == 0 and "gamma = 2" in out


def test_naive_flag_matches_kernel(capsys):
    code1, out1, _ = run(["gamma", "--family", "cycle:9"], capsys)
    code2, out2, _ = run(["gamma", "--family", "cycle:9", "--naive"], capsys)
    assert code1 == code2 == 0
    assert out1.split("(")[0] == out2.split("(")[0]


def test_verify_sections_csv(capsys, tmp_path):
    out_file = tmp_path / "report.csv"
    code, _, err = run(["verify-paper", "--sections", "cycles", "complete",
                        "--out", str(out_file)], capsys)
    assert code == 0
    header = out_file.read_text().splitlines()[0]
    assert header == ("instance,family,n,k,variant,solver,formula,"
                      "applicable,match,witness,runtime_ms")


def test_verify_prisms_reports_refutations(capsys, tmp_path):
    out_file = tmp_path / "report.csv"
    code, _, err = run(["verify-paper", "--sections", "prisms",
                        "--out", str(out_file)], capsys)
    # stated prism values contradicted by solver+oracle: honest exit 3
    assert code == 3
    assert "DISCREPANCY" in err
    assert "confirmed by independent oracle" in err


def test_verify_unknown_section(capsys):
    code, _, err = run(["verify-paper", "--sections", "nope"], capsys)
    assert code == 1
