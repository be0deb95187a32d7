import json
import subprocess
import sys

import pytest

from hansen.series import HansenRequest, compute_hansen_table

STATS_KEYS = {"delta_sq", "sigma_sq", "pe_fit", "sigma_coeff", "pe_coeff", "q_dist"}


def run_cli(*args: str) -> subprocess.CompletedProcess:
    cmd = [sys.executable, "-m", "hansen", *args]
    return subprocess.run(cmd, capture_output=True, text=True)


def test_help():
    cp = run_cli("--help")
    assert cp.returncode == 0, cp.stderr
    assert "Hansen coefficients" in cp.stdout


def test_earth_table_view():
    cp = run_cli("--body", "earth", "--n", "-3", "--m", "6")
    assert cp.returncode == 0, cp.stderr
    lines = cp.stdout.splitlines()
    k6 = next(line for line in lines if line.split()[:1] == ["6"])
    assert "0.99039" in k6
    assert "delta2_A" in cp.stdout and "Q_B" in cp.stdout


def test_json_schema_and_round_trip():
    cp = run_cli("--body", "earth", "--n", "-3", "--m", "6", "--format", "json")
    assert cp.returncode == 0, cp.stderr
    payload = json.loads(cp.stdout)
    assert set(payload) == {"e", "n", "m", "l", "s", "A", "B", "stats_A", "stats_B"}
    assert set(payload["stats_A"]) == STATS_KEYS
    assert set(payload["stats_B"]) == STATS_KEYS
    assert (payload["e"], payload["n"], payload["m"], payload["l"]) == (
        0.016708617, -3, 6, 100,
    )
    assert len(payload["A"]) == payload["s"] + 1
    assert len(payload["B"]) == payload["s"]

    # bit-exact round trip against an in-process run
    table = compute_hansen_table(HansenRequest(e=0.016708617, n=-3, m=6))
    assert payload["s"] == table.order
    assert payload["A"] == [float(a) for a in table.A]
    assert payload["B"] == [float(b) for b in table.B]
    assert payload["stats_A"]["delta_sq"] == table.stats_A.delta_sq
    assert payload["stats_B"]["q_dist"] == table.stats_B.q_dist


def test_json_circular_orbit():
    cp = run_cli("--eccentricity", "0", "--n", "4", "--m", "1", "--format", "json")
    assert cp.returncode == 0, cp.stderr
    payload = json.loads(cp.stdout)
    assert payload["A"][1] == pytest.approx(1.0, abs=1e-10)
    others = [abs(a) for k, a in enumerate(payload["A"]) if k != 1]
    assert max(others, default=0.0) <= 1e-10


def test_csv_schema():
    cp = run_cli("--body", "wild2", "--n", "3", "--m", "5", "--format", "csv")
    assert cp.returncode == 0, cp.stderr
    lines = cp.stdout.strip().splitlines()
    assert lines[0] == "k,A_k,B_k"
    # k = 0 has an empty B cell
    assert lines[1].startswith("0,") and lines[1].endswith(",")
    row2 = lines[3].split(",")
    assert row2[0] == "2"
    assert float(row2[1]) == pytest.approx(-1.75935, rel=5e-5)
    assert float(row2[2]) == pytest.approx(-1.75982, rel=5e-5)
    footer_names = [line.split(",")[0] for line in lines[-6:]]
    assert footer_names == [
        "delta2_A", "sigma_coeff_A", "Q_A", "delta2_B", "sigma_coeff_B", "Q_B",
    ]
    # shortest-repr cells parse back to exact doubles
    table = compute_hansen_table(HansenRequest(e=0.541, n=3, m=5))
    assert float(lines[-6].split(",")[1]) == table.stats_A.delta_sq


def test_dump_grid(tmp_path):
    path = tmp_path / "grid.csv"
    cp = run_cli(
        "--body", "ceres", "--n", "8", "--m", "2",
        "--samples", "60", "--dump-grid", str(path),
    )
    assert cp.returncode == 0, cp.stderr
    lines = path.read_text().strip().splitlines()
    assert len(lines) == 61
    assert lines[0] == "i,M,E,v,r_over_a,u_cos,u_sin"


def test_repeated_runs_are_byte_identical():
    args = ("--body", "lexell", "--n", "8", "--m", "4", "--format", "json")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


@pytest.mark.parametrize(
    "args",
    [
        ("--body", "vulcan", "--n", "1", "--m", "1"),
        ("--body", "earth", "--eccentricity", "0.5", "--n", "1", "--m", "1"),
        ("--eccentricity", "1.2", "--n", "1", "--m", "1"),
        ("--eccentricity", "-0.3", "--n", "1", "--m", "1"),
        ("--n", "1", "--m", "1"),
        ("--eccentricity", "0.1", "--n", "1", "--m", "-2"),
        ("--eccentricity", "0.1", "--n", "1", "--m", "1", "--samples", "3"),
        ("--eccentricity", "0.1", "--n", "1", "--m", "1", "--max-order", "60"),
        ("--eccentricity", "0.1", "--n", "1", "--m", "1", "--tol", "0"),
    ],
)
def test_usage_errors_exit_2(args):
    cp = run_cli(*args)
    assert cp.returncode == 2, cp.stdout
    assert cp.stderr


def test_numerical_failure_exits_3():
    # at e = 0.9 an unreachable eps1 leaves grid points that never satisfy
    # the residual test, so the solver hits its iteration cap
    cp = run_cli("--eccentricity", "0.9", "--n", "-3", "--m", "6", "--eps1", "1e-300")
    assert cp.returncode == 3
    assert "numerical failure" in cp.stderr
