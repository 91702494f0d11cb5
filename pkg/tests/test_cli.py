import json

import pytest

from chordenergy import cli
from chordenergy import geometry as geo


@pytest.fixture()
def curve_file(tmp_path):
    path = tmp_path / "curve.json"
    geo.save_curve(geo.make_circle(128), path)
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestScalarCommands:
    def test_energy(self, capsys, curve_file):
        code, out, _ = run(capsys, "energy", "--curve", curve_file,
                           "--j", "2", "--p", "1")
        assert code == cli.EXIT_OK
        payload = json.loads(out)
        assert payload["value"] == pytest.approx(3.89, abs=0.01)
        assert payload["n"] == 128

    def test_bound(self, capsys):
        code, out, _ = run(capsys, "bound", "--j", "2", "--p", "1")
        assert code == cli.EXIT_OK
        assert json.loads(out)["value"] == pytest.approx(4.0, abs=1e-8)

    def test_apnorm(self, capsys, curve_file):
        code, out, _ = run(capsys, "apnorm", "--curve", curve_file,
                           "--p", "2")
        assert code == cli.EXIT_OK
        assert json.loads(out)["value"] == pytest.approx(2 ** 0.5, abs=1e-3)

    def test_distortion(self, capsys, curve_file):
        code, out, _ = run(capsys, "distortion", "--curve", curve_file)
        assert code == cli.EXIT_OK
        assert json.loads(out)["value"] == pytest.approx(1.5708, abs=1e-3)

    def test_crossover(self, capsys):
        code, out, _ = run(capsys, "crossover")
        assert code == cli.EXIT_OK
        assert float(out) == pytest.approx(3.57202, abs=1e-4)

    def test_shape(self, capsys, curve_file):
        code, out, _ = run(capsys, "shape", "--curve", curve_file)
        assert code == cli.EXIT_OK
        payload = json.loads(out)
        assert payload["elliptic"] is True
        assert payload["r"] == pytest.approx(1.0, abs=1e-3)


class TestDeficitCommand:
    def test_series_csv(self, capsys, curve_file, tmp_path):
        out_path = tmp_path / "deficit.csv"
        code, _, _ = run(capsys, "deficit", "--curve", curve_file,
                         "--out", str(out_path))
        assert code == cli.EXIT_OK
        lines = out_path.read_text().splitlines()
        assert lines[0] == "s,rho"
        assert len(lines) == 128  # header + n - 1 shifts
        assert all(abs(float(line.split(",")[1])) < 1e-9
                   for line in lines[1:])

    def test_direct_to_stdout(self, capsys, curve_file):
        code, out, _ = run(capsys, "deficit", "--curve", curve_file,
                           "--direct")
        assert code == cli.EXIT_OK
        assert out.splitlines()[0] == "s,rho"


class TestOptimizationCommands:
    def test_maximize_writes_curve(self, capsys, tmp_path):
        out_path = tmp_path / "max.json"
        code, out, _ = run(capsys, "--n", "64", "maximize", "--p", "2",
                           "--max-iters", "200", "--out", str(out_path))
        assert code == cli.EXIT_OK
        payload = json.loads(out)
        assert payload["value"] == pytest.approx(2 ** 0.5, abs=1e-2)
        geo.load_curve(out_path).validate()

    def test_sweep_writes_csv(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run(capsys, "--n", "64", "sweep", "--p-min", "2",
                         "--p-max", "2.5", "--step", "0.5",
                         "--max-iters", "100", "--out", str(out_path))
        assert code == cli.EXIT_OK
        from chordenergy import harness
        assert len(harness.read_sweep_csv(out_path)) == 2

    def test_verify_small(self, capsys):
        code, out, _ = run(capsys, "--n", "128", "verify", "--curves", "1")
        assert code == cli.EXIT_OK
        assert "checks passed" in out


class TestErrorPaths:
    def test_divergent_params_exit_code(self, capsys, curve_file):
        code, _, err = run(capsys, "energy", "--curve", curve_file,
                           "--j", "3", "--p", "2")
        assert code == cli.EXIT_PRECONDITION
        assert "error" in err

    def test_missing_curve_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "energy", "--curve",
                         str(tmp_path / "nope.json"), "--j", "2", "--p", "1")
        assert code == cli.EXIT_IO

    def test_malformed_curve_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"dim": 2, "n": 4, "vertices": [[0, 0]]}')
        code, _, _ = run(capsys, "distortion", "--curve", str(bad))
        assert code == cli.EXIT_PRECONDITION

    def test_quiet_suppresses_json(self, capsys):
        code, out, _ = run(capsys, "--quiet", "bound", "--j", "2", "--p", "1")
        assert code == cli.EXIT_OK
        assert out == ""
