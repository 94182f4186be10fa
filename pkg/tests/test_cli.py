import json
import math

import pytest

from recdomain import Polynomial, RationalIndexFunction, RecurrenceSpec, serialize
from recdomain.cli import main


def write_spec(path, spec):
    with open(path, "w") as fh:
        serialize.dump_json(serialize.spec_to_dict(spec), fh)


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def fib_file(tmp_path):
    path = tmp_path / "fib.json"
    write_spec(path, RecurrenceSpec.constant((1.0, 1.0)))
    return str(path)


class TestAnalyze:
    def test_constant_spec(self, capsys, fib_file):
        code, out, _ = run_cli(capsys, ["analyze", fib_file])
        assert code == 0
        data = json.loads(out)
        phi = (math.sqrt(5) - 1) / 2
        assert abs(data["abs_radius"] - phi) <= 1e-9
        assert abs(data["pp_radius"] - phi) <= 1e-9
        assert data["tail_index"] == 0
        assert data["k"] == 2

    def test_divergent_limit_exits_three(self, capsys, tmp_path):
        spec = RecurrenceSpec(1, (RationalIndexFunction(
            Polynomial([0, 0, 1]), Polynomial([1, 1])),))
        path = tmp_path / "bad.json"
        write_spec(path, spec)
        code, _, err = run_cli(capsys, ["analyze", str(path)])
        assert code == 3
        assert "degree" in err

    def test_malformed_file_exits_two(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"k": 1}')
        code, _, err = run_cli(capsys, ["analyze", str(path)])
        assert code == 2 and "coeffs" in err

    def test_boundary_csv(self, capsys, fib_file, tmp_path):
        csv_path = tmp_path / "boundary.csv"
        code, _, _ = run_cli(capsys, ["analyze", fib_file,
                                      "--boundary-csv", str(csv_path)])
        assert code == 0
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "theta,re,im"
        assert len(lines) == 257

    def test_byte_stable(self, capsys, fib_file):
        _, first, _ = run_cli(capsys, ["analyze", fib_file])
        _, second, _ = run_cli(capsys, ["analyze", fib_file])
        assert first == second

    def test_reads_stdin(self, capsys, fib_file, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(open(fib_file).read()))
        code, out, _ = run_cli(capsys, ["analyze", "-"])
        assert code == 0
        assert json.loads(out)["k"] == 2

    def test_tol_flag_loosens_bisection(self, capsys, fib_file):
        code, out, _ = run_cli(capsys, ["analyze", fib_file, "--tol", "1e-3"])
        assert code == 0
        phi = (math.sqrt(5) - 1) / 2
        assert abs(json.loads(out)["abs_radius"] - phi) <= 1e-3


class TestHeun:
    def test_limits_and_roots(self, capsys):
        code, out, _ = run_cli(capsys, ["heun", "--a", "2"])
        assert code == 0
        data = json.loads(out)
        assert data["limits"] == [[1.5, 0.0], [-0.5, 0.0]]
        assert data["indicial_roots"] == [[0.0, 0.0], [0.0, -0.0]] \
            or data["indicial_roots"] == [[0.0, 0.0], [0.0, 0.0]]
        assert data["indicial_roots_coincide"]
        assert len(data["coefficient_values"]) == 8

    def test_a_minus_one_flags_tied_roots(self, capsys):
        code, out, _ = run_cli(capsys, ["heun", "--a=-1"])
        assert code == 0
        data = json.loads(out)
        assert data["abs_radius"] == 1.0
        assert data["smallest_roots_tied"]

    def test_a_zero_exits_two(self, capsys):
        code, _, err = run_cli(capsys, ["heun", "--a", "0"])
        assert code == 2 and "nonzero" in err

    def test_denominator_pole_exits_two(self, capsys):
        code, _, _ = run_cli(capsys, ["heun", "--a", "2", "--gamma=-2"])
        assert code == 2

    def test_series_evaluation(self, capsys):
        code, out, _ = run_cli(capsys, ["heun", "--a", "2", "--x", "0.25"])
        assert code == 0
        data = json.loads(out)
        assert len(data["series"]) == 1
        assert data["series"][0]["terms"] == 200

    def test_second_indicial_root(self, capsys):
        code, out, _ = run_cli(capsys, ["heun", "--a", "2", "--gamma", "0.5",
                                        "--lambda-root", "second"])
        assert code == 0
        data = json.loads(out)
        assert data["lambda"] == [0.5, 0.0]
        # the domain does not depend on the exponent
        code, out0, _ = run_cli(capsys, ["heun", "--a", "2", "--gamma", "0.5"])
        assert json.loads(out0)["abs_radius"] == data["abs_radius"]

    def test_params_file(self, capsys, tmp_path):
        path = tmp_path / "params.json"
        path.write_text(json.dumps({"a": [2.0, 0.0], "q": 0.0}))
        code, out, _ = run_cli(capsys, ["heun", "--params-file", str(path)])
        assert code == 0
        assert json.loads(out)["limits"] == [[1.5, 0.0], [-0.5, 0.0]]

    def test_missing_a_exits_two(self, capsys):
        code, _, err = run_cli(capsys, ["heun"])
        assert code == 2 and "--a" in err


class TestVerify:
    def test_constant_spec_passes(self, capsys, fib_file, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, out, _ = run_cli(capsys, ["verify", fib_file, "--n-max", "5000"])
        assert code == 0
        data = json.loads(out)
        assert data["violations"] == []
        assert data["min_slack"] >= 0
        sweep = (tmp_path / "verify_sweep.csv").read_text().splitlines()
        assert sweep[0] == "radius,classification,tail_magnitude"
        assert len(sweep) == 10

    def test_certification_failure_exits_three(self, capsys, tmp_path):
        spec = RecurrenceSpec(1, (RationalIndexFunction(
            Polynomial([5, 1]), Polynomial([1, 1])),))
        path = tmp_path / "slow.json"
        write_spec(path, spec)
        code, _, err = run_cli(capsys, ["verify", str(path), "--horizon", "50",
                                        "--sweep-csv", str(tmp_path / "s.csv")])
        assert code == 3 and "horizon" in err

    def test_violations_trip_exit_one(self, capsys, fib_file, tmp_path, monkeypatch):
        # the bounds are theorems, so a genuine violation needs a doctored
        # report; this pins the CI tripwire wiring itself
        from recdomain.verify import DominationReport
        import recdomain.cli as cli_module

        def fake_check(spec, profile, j_max):
            return DominationReport(1, 0.05, j_max, -0.25, (3, 4), 0.5)

        monkeypatch.setattr(cli_module, "check_domination", fake_check)
        code, out, _ = run_cli(capsys, ["verify", fib_file, "--n-max", "5000",
                                        "--sweep-csv", str(tmp_path / "s.csv")])
        assert code == 1
        assert json.loads(out)["violations"] == [3, 4]


class TestFrobenius:
    def test_pipeline_matches_heun_command(self, capsys, tmp_path):
        ode_path = tmp_path / "heun_ode.json"
        spec_path = tmp_path / "heun_spec.json"
        code, heun_out, _ = run_cli(capsys, ["heun", "--a", "2",
                                             "--emit-ode", str(ode_path)])
        assert code == 0
        code, _, _ = run_cli(capsys, ["frobenius", str(ode_path), "--lam", "0",
                                      "-o", str(spec_path)])
        assert code == 0
        code, analyze_out, _ = run_cli(capsys, ["analyze", str(spec_path)])
        assert code == 0
        a = json.loads(analyze_out)
        h = json.loads(heun_out)
        assert a["tail_index"] == h["tail_index"]
        assert abs(a["abs_radius"] - h["abs_radius"]) <= 1e-10
        assert abs(a["pp_radius"] - h["pp_radius"]) <= 1e-10
        for pa, ph in zip(a["limits"], h["limits"]):
            assert abs(complex(*pa) - complex(*ph)) <= 1e-10
        for ra, rh in zip(a["characteristic_roots"], h["characteristic_roots"]):
            assert abs(complex(*ra) - complex(*rh)) <= 1e-10

    def test_derived_spec_is_reusable(self, capsys, tmp_path):
        # y' - y = 0 gives the k = 1 exponential recurrence
        ode = {"order": 1, "coeffs": [[[-1.0, 0.0]], [[1.0, 0.0]]]}
        ode_path = tmp_path / "exp.json"
        ode_path.write_text(json.dumps(ode))
        code, out, _ = run_cli(capsys, ["frobenius", str(ode_path)])
        assert code == 0
        data = json.loads(out)
        assert data["k"] == 1
        assert data["lambda"] == [0.0, 0.0] or abs(complex(*data["lambda"])) < 1e-12

    def test_irregular_point_exits_five(self, capsys, tmp_path):
        ode = {"order": 2,
               "coeffs": [[[-1.0, 0.0]], [], [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]]}
        path = tmp_path / "irregular.json"
        path.write_text(json.dumps(ode))
        code, _, err = run_cli(capsys, ["frobenius", str(path)])
        assert code == 5 and "singular" in err

    def test_wrong_exponent_exits_four(self, capsys, tmp_path):
        ode_path = tmp_path / "heun_ode.json"
        run_cli(capsys, ["heun", "--a", "2", "--emit-ode", str(ode_path)])
        code, _, _ = run_cli(capsys, ["frobenius", str(ode_path), "--lam", "0.3"])
        assert code == 4
