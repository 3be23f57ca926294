"""End-to-end tests of the command-line interface.

Each test drives main() with an argv list and inspects the files or streams
it produces, including exit codes for usage and numerical failures.
"""

from __future__ import annotations

import json
import math

import pytest

from qbrownian.cli import main
from qbrownian.free_particle import ohmic_specific_heat
from qbrownian.oscillator import undamped_thermo


def read_csv(path):
    lines = path.read_text().rstrip("\n").split("\n")
    header = lines[0].split(",")
    assert lines[1].startswith("# ")
    rows = [line.split(",") for line in lines[2:]]
    return header, lines[1], rows


def test_no_arguments_is_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_curve_free_particle_csv(tmp_path):
    out = tmp_path / "free.csv"
    assert main(["curve", "--model", "free", "--points", "40", "--log",
                 "--tmin", "0.001", "--tmax", "50", "--out", str(out)]) == 0
    header, comment, rows = read_csv(out)
    assert header == ["theta", "C_energy"]
    assert "model=free" in comment and "version=" in comment
    assert len(rows) == 40
    heats = [float(r[1]) for r in rows]
    assert all(b > a for a, b in zip(heats, heats[1:]))
    # the classical plateau is approached like 1/(2 pi theta)
    assert heats[-1] == pytest.approx(0.5, abs=2.0 / (2.0 * math.pi * 50.0))


def test_curve_values_round_trip_exactly(tmp_path):
    out = tmp_path / "free.csv"
    main(["curve", "--model", "free", "--points", "5", "--out", str(out)])
    _, _, rows = read_csv(out)
    for row in rows:
        theta = float(row[0])
        # 17 significant digits reproduce the double bit for bit
        assert float(row[1]) == ohmic_specific_heat(theta).C


def test_curve_zero_alpha_matches_undamped(tmp_path):
    out = tmp_path / "undamped.csv"
    assert main(["curve", "--model", "oscillator", "--alpha", "0",
                 "--quantities", "C,S,E", "--tmin", "0.5", "--tmax", "2.0",
                 "--points", "4", "--out", str(out)]) == 0
    header, _, rows = read_csv(out)
    assert header == ["theta", "C_energy", "S", "E"]
    for row in rows:
        want = undamped_thermo(float(row[0]))
        assert float(row[1]) == pytest.approx(want.C, abs=1e-12)
        assert float(row[2]) == pytest.approx(want.S, abs=1e-12)
        assert float(row[3]) == pytest.approx(want.E, rel=1e-9)


def test_curve_both_routes_agree_for_ohmic(tmp_path):
    out = tmp_path / "both.csv"
    assert main(["curve", "--model", "oscillator", "--route", "both",
                 "--tmin", "0.05", "--tmax", "20", "--points", "30", "--log",
                 "--out", str(out)]) == 0
    header, _, rows = read_csv(out)
    assert header == ["theta", "C_energy", "C_partition"]
    for row in rows:
        assert abs(float(row[1]) - float(row[2])) < 1e-11


def test_curve_is_deterministic(tmp_path):
    argv = ["curve", "--model", "oscillator", "--kernel", "drude",
            "--cutoff-ratio", "5", "--quantities", "C,E", "--points", "3",
            "--tmin", "0.5", "--tmax", "2.0"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_compare_free_ohmic(tmp_path):
    out = tmp_path / "cmp.json"
    assert main(["compare", "--model", "free", "--tmin", "0.5", "--tmax", "2.0",
                 "--points", "3", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["model"] == "free"
    assert report["alpha"] is None
    assert report["cutoff_ratio"] is None
    assert len(report["points"]) == 3
    for point in report["points"]:
        assert set(point) == {"theta", "E_direct", "E_partition", "gap",
                              "C_closed", "C_fd_direct", "C_fd_partition",
                              "status"}
        assert point["status"] == "regularized"
        assert point["gap"] == 0.0
        assert point["E_direct"] == point["E_partition"]
        assert point["C_fd_direct"] == pytest.approx(point["C_closed"], abs=1e-5)


def test_compare_oscillator_drude(tmp_path):
    out = tmp_path / "cmp.json"
    assert main(["compare", "--model", "oscillator", "--kernel", "drude",
                 "--cutoff-ratio", "10", "--tmin", "0.5", "--tmax", "2.0",
                 "--points", "2", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["cutoff_ratio"] == 10.0
    for point in report["points"]:
        assert point["status"] == "ok"
        assert point["C_closed"] is None
        assert point["gap"] > 0.0
        residual = (point["E_partition"] - point["E_direct"]) - point["gap"]
        assert abs(residual) < 1e-9
        # the two prescriptions disagree measurably at finite cutoff
        assert point["C_fd_partition"] != pytest.approx(point["C_fd_direct"],
                                                        abs=1e-4)
        for key in ("C_fd_direct", "C_fd_partition"):
            assert 0.0 < point[key] < 1.2


@pytest.mark.parametrize("argv", [
    ["curve", "--model", "free", "--route", "partition"],
    ["curve", "--model", "free", "--alpha", "1.0"],
    ["curve", "--model", "free", "--quantities", "S"],
    ["curve", "--model", "oscillator", "--quantities", "C,X"],
    ["curve", "--model", "oscillator", "--cutoff-ratio", "5"],
    ["curve", "--model", "oscillator", "--kernel", "drude",
     "--cutoff-ratio", "-1"],
    ["curve", "--model", "oscillator", "--kernel", "drude", "--quantities", "S"],
    ["curve", "--model", "oscillator", "--tmin", "2", "--tmax", "1"],
    ["curve", "--model", "oscillator", "--tol", "2.0"],
    ["expansions", "--model", "free", "--alpha", "1"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    captured = capsys.readouterr()
    assert "usage error:" in captured.err


def test_unresolvable_sum_exits_3(capsys):
    # at theta = 1e-8 the Drude knee sits beyond the term cap, so the tail
    # model never applies and the sum must report failure, tagged by point
    ret = main(["curve", "--model", "oscillator", "--kernel", "drude",
                "--quantities", "E", "--points", "2",
                "--tmin", "1e-8", "--tmax", "1e-7"])
    captured = capsys.readouterr()
    assert ret == 3
    assert "numerical failure:" in captured.err
    assert "theta" in captured.err


def test_fig1_writes_main_and_inset(tmp_path):
    prefix = tmp_path / "fig1"
    assert main(["fig1", "--points", "30", "--out", str(prefix)]) == 0
    header, comment, rows = read_csv(tmp_path / "fig1_main.csv")
    assert header == ["theta_gamma", "C_exact", "C_lowT"]
    assert "model=free" in comment
    assert len(rows) == 30
    assert float(rows[0][0]) == pytest.approx(1e-3)
    assert float(rows[-1][0]) == pytest.approx(10.0)

    header, _, rows = read_csv(tmp_path / "fig1_inset.csv")
    assert header == ["theta_gamma", "C_cutoff_0.01", "C_cutoff_0.1",
                      "C_cutoff_1", "C_cutoff_inf", "C_lowT"]
    for row in rows:
        theta = float(row[0])
        if theta < 0.3:
            heats = [float(x) for x in row[1:5]]
            # softer cutoffs damp less, ordering strict until the curves cross
            assert heats[0] > heats[1] > heats[2] > heats[3]


def test_expansions_oscillator(tmp_path):
    out = tmp_path / "exp.csv"
    assert main(["expansions", "--model", "oscillator", "--tmin", "0.01",
                 "--tmax", "64", "--points", "8", "--out", str(out)]) == 0
    lines = out.read_text().rstrip("\n").split("\n")
    assert lines[0] == "kind,theta,exact,expansion,abs_error,error_exponent"
    rows = [line.split(",") for line in lines[2:]]
    kinds = {row[0] for row in rows}
    assert kinds == {"undamped_lowT", "undamped_highT", "damped_lowT",
                     "damped_highT"}
    for row in rows:
        kind, theta = row[0], float(row[1])
        exact, approx = float(row[2]), float(row[3])
        if kind == "damped_lowT" and theta <= 0.02:
            assert float(row[5]) == pytest.approx(5.0, abs=1.0)
        if kind == "undamped_lowT" and theta <= 0.1:
            assert approx == pytest.approx(exact, rel=0.1)


def test_expansions_free(tmp_path):
    out = tmp_path / "exp.csv"
    assert main(["expansions", "--model", "free", "--tmin", "0.01",
                 "--tmax", "0.05", "--points", "4", "--out", str(out)]) == 0
    lines = out.read_text().rstrip("\n").split("\n")
    rows = [line.split(",") for line in lines[2:]]
    assert {row[0] for row in rows} == {"free_lowT"}
    for row in rows:
        assert float(row[3]) == pytest.approx(float(row[2]), rel=0.01)


def test_curve_writes_to_stdout_by_default(capsys):
    assert main(["curve", "--model", "free", "--points", "3"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("theta,C_energy\n# ")
