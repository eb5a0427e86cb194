"""CLI exit codes, stdout contracts, and JSON output determinism."""

import json
import subprocess
import sys

import pytest

from stochord.cli import main


def test_compare_holds_exits_zero(capsys):
    rc = main(["compare", "--class", "IHR", "--a", "3,5", "--b", "2,4"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "order=icv" in out
    assert "status=holds" in out


def test_compare_undetermined_exits_two(capsys):
    rc = main(["compare", "--class", "DDA", "--a", "2,3", "--b", "3,5"])
    out = capsys.readouterr().out
    assert rc == 2
    assert "status=undetermined" in out
    assert "inf Z" in out


def test_compare_auto_picks_ss_for_star_classes(capsys):
    rc = main(["compare", "--class", "DHRA", "--a", "2,3", "--b", "3,5"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "order=ss" in out


def test_compare_rejects_unknown_class(capsys):
    rc = main(["compare", "--class", "XYZ", "--a", "2,3", "--b", "3,5"])
    err = capsys.readouterr().err
    assert rc == 64
    assert "XYZ" in err
    assert "DD" in err  # lists the valid names


def test_compare_rejects_malformed_spec(capsys):
    assert main(["compare", "--class", "ID", "--a", "3", "--b", "2,4"]) == 64
    capsys.readouterr()
    assert main(["compare", "--class", "ID", "--a", "5,3", "--b", "2,4"]) == 64
    capsys.readouterr()


def test_compare_rejects_mismatched_order(capsys):
    rc = main(["compare", "--class", "DD", "--a", "2,5", "--b", "3,5",
               "--order", "icv"])
    err = capsys.readouterr().err
    assert rc == 64
    assert "icx" in err


def test_unknown_option_is_usage_error(capsys):
    assert main(["compare", "--klass", "ID", "--a", "2,3", "--b", "2,3"]) == 64
    capsys.readouterr()


def test_compare_json_is_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    args = ["compare", "--class", "ID", "--a", "3,5", "--b", "2,4"]
    assert main(args + ["--json", str(out1)]) == 0
    assert main(args + ["--json", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
    assert not list(tmp_path.glob("*.tmp.*")), "atomic write left temp files"

    payload = json.loads(out1.read_text())
    assert payload["command"] == "compare"
    assert payload["class"] == "ID"
    assert payload["status"] == "holds"
    assert payload["a"] == {"i": 3, "n": 5}
    assert set(payload) >= {"config", "order", "lhs_witness", "rhs_witness",
                            "condition"}


def test_region_stdout(capsys):
    rc = main(["region", "--class", "DDA", "-n", "3", "-m", "4"])
    out = capsys.readouterr().out
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "i,j,class"
    assert len(lines) == 13
    assert lines[1].startswith("1,1,")


def test_region_csv_file(tmp_path, capsys):
    path = tmp_path / "map.csv"
    rc = main(["region", "--class", "DHRA", "-n", "3", "-m", "5",
               "--csv", str(path)])
    captured = capsys.readouterr()
    assert rc == 0
    assert captured.out == ""  # redirected
    text = path.read_text()
    assert text.startswith("i,j,class\n")
    assert "NoComparability" in text


def test_region_rejects_n_greater_than_m(capsys):
    assert main(["region", "--class", "DDA", "-n", "5", "-m", "4"]) == 64
    capsys.readouterr()


def test_bounds_table_matches_golden(golden_dir, capsys):
    rc = main(["bounds-table", "-n", "10"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out == (golden_dir / "table1_n10.csv").read_text()


def test_verify_ss_exit_codes(capsys):
    assert main(["verify-ss", "--frame", "DHRA", "--a", "2,3", "--b", "3,5"]) == 0
    out = capsys.readouterr().out
    assert "frame=DHRA" in out and "status=holds" in out

    assert main(["verify-ss", "--frame", "DDA", "--a", "2,3", "--b", "3,5"]) == 2
    out = capsys.readouterr().out
    assert "status=undetermined" in out
    assert "inf_z=" in out


def test_data_interval_carbon(data_dir, tmp_path, capsys):
    csv = str(data_dir / "carbon_fibers.csv")
    rc = main(["data-interval", "--data", csv, "--spec", "20,100",
               "--lower-class", "DRHR", "--upper-class", "IOR"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "rank_lo=20 rank_hi=20" in out
    assert "x_lo=1.69 x_hi=1.69" in out
    assert "n_data=100 feasible=true" in out

    json_path = tmp_path / "interval.json"
    rc = main(["data-interval", "--data", csv, "--spec", "20,100",
               "--lower-class", "DRHR", "--upper-class", "IOR",
               "--json", str(json_path)])
    capsys.readouterr()
    assert rc == 0
    payload = json.loads(json_path.read_text())
    assert payload["rank_lo"] == 20 and payload["rank_hi"] == 20
    assert payload["x_lo"] == 1.69 and payload["x_hi"] == 1.69
    assert payload["feasible"] is True


def test_data_interval_infeasible_exit_two(data_dir, capsys):
    csv = str(data_dir / "carbon_fibers.csv")
    rc = main(["data-interval", "--data", csv, "--spec", "9,10",
               "--lower-class", "DOR", "--upper-class", "ID"])
    captured = capsys.readouterr()
    assert rc == 2
    assert "feasible=false" in captured.out
    assert "infeasible" in captured.err


def test_data_interval_missing_file(tmp_path, capsys):
    rc = main(["data-interval", "--data", str(tmp_path / "nope.csv"),
               "--spec", "3,10", "--lower-class", "DD", "--upper-class", "IHR"])
    capsys.readouterr()
    assert rc == 64


def test_data_interval_malformed_line(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("value\n1.5\ntwo\n3.0\n")
    rc = main(["data-interval", "--data", str(bad), "--spec", "3,10",
               "--lower-class", "DD", "--upper-class", "IHR"])
    err = capsys.readouterr().err
    assert rc == 1
    assert err.startswith("error:")
    assert ":3:" in err  # names the offending line


def test_probe_exit_codes(capsys):
    assert main(["probe", "--order", "st", "--reference", "uniform",
                 "--a", "3,5", "--b", "2,5"]) == 0
    out = capsys.readouterr().out
    assert "passed=true" in out

    assert main(["probe", "--order", "st", "--reference", "uniform",
                 "--a", "2,5", "--b", "3,5"]) == 2
    capsys.readouterr()


def test_probe_ss_on_signed_support_is_usage_error(capsys):
    rc = main(["probe", "--order", "ss", "--reference", "logistic",
               "--a", "2,5", "--b", "2,5"])
    err = capsys.readouterr().err
    assert rc == 64
    assert "nonnegative support" in err


def test_version_via_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "stochord.cli", "--version"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "stochord, version 0.1.0"
