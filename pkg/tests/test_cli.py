"""CLI surface: CSV emission, scans, reports, verify suites, exit codes."""

import numpy as np
import pytest

from spinsqueeze import cli, pairwise, verify
from spinsqueeze.dicke import CollectiveMoments


def run_cli(args):
    return cli.main(args)


def read_rows(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]


class TestEvolve:
    def test_n2_analytic_profile(self, tmp_path):
        out = tmp_path / "traj.csv"
        code = run_cli(
            ["evolve", "--model", "one-axis", "--n", "2", "--mu", "1",
             "--t-max", str(np.pi), "--dt", str(np.pi / 200), "--out", str(out)]
        )
        assert code == 0
        rows = read_rows(out)
        assert len(rows) == 201
        for row in rows:
            t = float(row["t"])
            assert float(row["xi2_closed"]) == pytest.approx(
                1 - abs(np.sin(t)), abs=1e-10
            )
            assert float(row["concurrence"]) == pytest.approx(abs(np.sin(t)), abs=1e-10)

    def test_two_axis_n6_relation(self, tmp_path):
        out = tmp_path / "h3.csv"
        assert run_cli(
            ["evolve", "--model", "two-axis", "--n", "6", "--gamma", "1",
             "--t-max", "3", "--dt", "0.01", "--out", str(out)]
        ) == 0
        rows = read_rows(out)
        for row in rows:
            xi2 = float(row["xi2_closed"])
            conc = float(row["concurrence"])
            assert conc == pytest.approx((1 - xi2) / 5, abs=1e-9)

    def test_zero_dt_is_usage_error(self, tmp_path):
        assert run_cli(["evolve", "--n", "2", "--dt", "0", "--t-max", "1"]) == 2

    def test_unwritable_output(self):
        assert run_cli(
            ["evolve", "--n", "2", "--t-max", "1", "--dt", "0.5",
             "--out", "/nonexistent/dir/x.csv"]
        ) == 2

    def test_byte_stability(self, tmp_path):
        out_a = tmp_path / "a.csv"
        out_b = tmp_path / "b.csv"
        args = ["evolve", "--model", "two-axis", "--n", "4", "--t-max", "1",
                "--dt", "0.05"]
        assert run_cli(args + ["--out", str(out_a)]) == 0
        assert run_cli(args + ["--out", str(out_b)]) == 0
        assert out_a.read_bytes() == out_b.read_bytes()
        assert b"\r" not in out_a.read_bytes()

    def test_round_trip_precision(self, tmp_path):
        out = tmp_path / "rt.csv"
        assert run_cli(
            ["evolve", "--model", "one-axis", "--n", "5", "--t-max", "2",
             "--dt", "0.1", "--out", str(out)]
        ) == 0
        rows = cli.evolve_rows(
            cli.RunConfig(model="one-axis", n_qubits=5, mu=1.0, t_max=2, dt=0.1)
        )
        for text_row, row in zip(read_rows(out), rows):
            for key, value in row.items():
                if isinstance(value, str) or (
                    isinstance(value, float) and np.isnan(value)
                ):
                    continue
                parsed = float(text_row[key])
                assert parsed == pytest.approx(value, rel=1e-15, abs=0.0)

    def test_degenerate_flag_token(self):
        # H1 at N=2, t = pi/2 reaches the maximally entangled state with
        # vanishing mean spin; the general parameter must degrade gracefully
        rows = cli.evolve_rows(
            cli.RunConfig(model="one-axis", n_qubits=2, t_max=np.pi, dt=np.pi / 2)
        )
        degenerate = [r for r in rows if r["degenerate_flag"] == 1]
        assert degenerate
        assert all(np.isnan(r["xi2_general"]) for r in degenerate)
        assert cli.fmt(float("nan"), 17) == "nan"

    def test_config_file_with_flag_override(self, tmp_path):
        config = tmp_path / "run.cfg"
        config.write_text(
            "model = one-axis\nn = 2\nmu = 1\nt-max = 1\ndt = 0.5\n# comment\n"
        )
        out = tmp_path / "cfg.csv"
        assert run_cli(
            ["evolve", "--config", str(config), "--dt", "0.25", "--out", str(out)]
        ) == 0
        assert len(read_rows(out)) == 5  # dt flag overrode the file value


class TestScan:
    def test_one_axis_field_inequality(self, tmp_path):
        out = tmp_path / "scan.csv"
        code = run_cli(
            ["scan", "--model", "one-axis-field", "--n", "2,3,4,6",
             "--mu", "1", "--omega", "0.5,2", "--t-max", "5", "--dt", "0.02",
             "--out", str(out)]
        )
        assert code == 0
        rows = read_rows(out)
        assert len(rows) == 8
        for row in rows:
            assert float(row["max_xi2"]) <= 1 + 1e-9
            assert row["max_xi2_exceeds_one"] == "0"

    def test_sorted_deterministic_with_workers(self, tmp_path):
        out_a = tmp_path / "w1.csv"
        out_b = tmp_path / "w2.csv"
        args = ["scan", "--model", "two-axis", "--n", "4,2,6", "--gamma", "1",
                "--t-max", "1", "--dt", "0.05"]
        assert run_cli(args + ["--out", str(out_a), "--workers", "1"]) == 0
        assert run_cli(args + ["--out", str(out_b), "--workers", "3"]) == 0
        assert out_a.read_bytes() == out_b.read_bytes()
        ns = [int(r["n"]) for r in read_rows(out_a)]
        assert ns == sorted(ns)

    def test_empty_grid_usage_error(self, tmp_path):
        assert run_cli(["scan", "--n", "", "--out", str(tmp_path / "x.csv")]) == 2


class TestDicke:
    def test_report_values(self, capsys):
        assert run_cli(["dicke", "--n", "4", "--excitations", "2"]) == 0
        out = capsys.readouterr().out
        assert "xi2          = 3" in out
        assert "0.33333333333333337" in out

    def test_unentangled_extreme(self, capsys):
        assert run_cli(["dicke", "--n", "4", "--excitations", "0"]) == 0
        out = capsys.readouterr().out
        assert "xi2          = 1" in out

    def test_triplet(self, capsys):
        assert run_cli(["dicke", "--n", "2", "--excitations", "1"]) == 0
        out = capsys.readouterr().out
        assert "xi2          = 2" in out
        assert "concurrence  = 1 " in out

    def test_out_of_range(self):
        assert run_cli(["dicke", "--n", "2", "--excitations", "5"]) == 2


class TestVerify:
    def test_unknown_suite_exits_2(self):
        with pytest.raises(SystemExit) as err:
            run_cli(["verify", "nonsense"])
        assert err.value.code == 2

    def test_x_form_suite_passes(self, capsys):
        assert run_cli(["verify", "x-form", "--seed", "5"]) == 0
        out = capsys.readouterr().out
        assert "pass" in out
        assert "PCG64" in out  # RNG algorithm recorded

    def test_lemma3_suite_passes(self):
        assert run_cli(["verify", "lemma3"]) == 0

    def test_lemma2_mutation_detected(self, monkeypatch, capsys):
        # flip one sign in the moment-to-matrix-element map; the partial-trace
        # comparison must catch it
        original = pairwise.reduced_two_qubit

        def mutated(m):
            r = original(m)
            return pairwise.TwoQubitReduced(
                v_plus=r.v_minus, v_minus=r.v_plus,  # sign of the <Sz> shift flipped
                y=r.y, x_plus=r.x_plus, x_minus=r.x_minus, u=r.u,
                n_qubits=r.n_qubits,
            )

        monkeypatch.setattr(pairwise, "reduced_two_qubit", mutated)
        checks = verify.suite_lemma2(seed=0, per_n=20, n_values=(3, 4))
        assert any(not c.passed for c in checks)
