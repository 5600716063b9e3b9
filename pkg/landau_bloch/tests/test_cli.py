import json
import math
from bloch_lab import __version__, cli
from bloch_lab.maps import PolyMap
from bloch_lab.services import BoundReport, save_poly_map
from bloch_lab.utils import SolverError
import pytest

@pytest.fixture(autouse=True)
def fixed_epoch(monkeypatch):
    monkeypatch.delenv("SOURCE_DATE_EPOCH", raising=False)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestConstants:
    def test_classical_values(self, capsys, validate_document):
        document = run_json(capsys, "constants", "--alpha", "1", "--n", "1", "--lambda", "1")
        validate_document("constants", document)
        assert document["a0"] == pytest.approx(1 / math.sqrt(3))
        assert document["m_lambda"] == document["a0"]
        assert document["schlicht_radius_lower"] == pytest.approx(math.sqrt(3) / 4, abs=1e-6)
        assert document["subordination_radius"] == pytest.approx(1.0)
        assert document["admissible_upper_radius"] == 0.0
        assert document["params"] == {"alpha": 1.0, "n": 1, "lambda": 1.0, "K": 1.0}

    def test_manifest(self, capsys, validate_document):
        document = run_json(capsys, "constants", "--seed", "5")
        manifest = document["manifest"]
        validate_document("manifest", manifest)
        assert manifest["command"] == "constants"
        assert manifest["seed"] == 5
        assert manifest["tool_version"] == __version__
        assert manifest["timestamp"] == "1970-01-01T00:00:00Z"

    @pytest.mark.parametrize("lam", ["0.5", "1e-100"])
    def test_matches_schema(self, capsys, validate_document, lam):
        document = run_json(capsys, "constants", "--lambda", lam, "--n", "2")
        validate_document("constants", document)

    @pytest.mark.parametrize(
        "argv",
        [
            ("constants", "--lambda", "1.5"),
            ("constants", "--alpha", "-1"),
            ("constants", "--K", "0.5"),
            ("constants", "--n", "0"),
            ("constants", "--lambda", "0"),
            ("constants", "--lambda", "1e-300"),
        ],
    )
    def test_invalid_parameters(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 2
        assert out == ""
        assert "Ошибка параметров" in err

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "constants", "--format", "csv")
        assert code == 0
        assert out.startswith("# manifest: ")
        assert out.split("\n")[1].startswith("a0,m_lambda,")

    def test_csv_without_manifest(self, capsys):
        code, out, _ = run(capsys, "constants", "--format", "csv", "--no-manifest")
        assert code == 0
        assert out.startswith("a0,m_lambda,")
        assert "#" not in out


class TestHardy:
    def test_example(self, capsys, validate_document):
        document = run_json(capsys, "hardy", "--p", "2", "--n", "1")
        validate_document("hardy", document)
        assert document["r0"] == pytest.approx(0.8165, abs=1e-4)
        assert document["m_const"] == pytest.approx(4.19960, abs=1e-5)
        assert document["R_ratio"] == pytest.approx(document["r0"] ** -1)

    def test_regime_violation(self, capsys):
        code, _, err = run(
            capsys, "hardy", "--p", "2", "--n", "2", "--k0", "0.01", "--lambda0", "0.01"
        )
        assert code == 2
        assert "rho0" in err

    def test_k0_below_lambda0(self, capsys):
        code, _, _ = run(capsys, "hardy", "--k0", "0.5", "--lambda0", "1")
        assert code == 2

    def test_unrepresentable_chain(self, capsys):
        code, out, err = run(capsys, "hardy", "--n", "150", "--p", "1")
        assert code == 2
        assert out == ""
        assert "непредставим" in err


class TestCurve:
    def test_default_is_csv(self, capsys):
        code, out, _ = run(capsys, "curve", "lower", "--points", "5", "--lambda", "0.5")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[1] == "z_abs,lower_bound"
        assert len(lines) == 7
        manifest = json.loads(lines[0][len("# manifest: "):])
        assert manifest["parameters"]["kind"] == "lower"
        assert manifest["parameters"]["points"] == 5

    @pytest.mark.parametrize("kind", ["lower", "upper", "schlicht-vs-lambda", "phi", "rho1"])
    def test_json(self, capsys, validate_document, kind):
        document = run_json(capsys, "curve", kind, "--points", "4", "--lambda", "0.5", "--format", "json")
        validate_document("curve", document)
        assert document["kind"] == kind
        assert len(document["rows"]) == 4
        assert all(len(row) == len(document["columns"]) for row in document["rows"])

    def test_schlicht_vs_lambda_ends_at_classical_value(self, capsys):
        document = run_json(capsys, "curve", "schlicht-vs-lambda", "--points", "5", "--format", "json")
        assert document["columns"] == ["lambda", "schlicht_radius_lower"]
        assert document["rows"][-1][0] == pytest.approx(1.0)
        assert document["rows"][-1][1] == pytest.approx(math.sqrt(3) / 4, abs=1e-6)

    def test_no_manifest(self, capsys):
        code, out, _ = run(capsys, "curve", "phi", "--points", "3", "--no-manifest")
        assert code == 0
        assert len(out.strip().split("\n")) == 4
        assert not out.startswith("#")

    def test_upper_with_lambda_one(self, capsys):
        code, out, _ = run(capsys, "curve", "upper", "--lambda", "1")
        assert code == 2
        assert out == ""

    def test_unknown_kind(self, capsys):
        code, _, _ = run(capsys, "curve", "middle")
        assert code == 2


class TestVerify:
    def test_extremal(self, capsys, validate_document):
        document = run_json(capsys, "verify", "extremal", "--samples", "64")
        validate_document("verify", document)
        assert document["passed"] is True
        assert document["report"]["violations"] == 0
        assert document["report"]["sharpness_gap"] <= 1e-8
        assert len(document["cases"]) == 27
        assert document["manifest"]["parameters"] == {"suite": "extremal", "samples": 64, "tol": 1e-9}

    def test_repeat_runs_are_identical(self, capsys):
        first = run(capsys, "verify", "extremal", "--samples", "32", "--seed", "3")
        second = run(capsys, "verify", "extremal", "--samples", "32", "--seed", "3")
        assert first[0] == 0
        assert first[1] == second[1]

    def test_csv_cases(self, capsys):
        code, out, _ = run(capsys, "verify", "extremal", "--samples", "16", "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[1] == "case,samples_tested,violations,worst_margin,sharpness_gap"
        assert len(lines) == 2 + 27

    def test_map_file(self, capsys, tmp_path):
        path = tmp_path / "map.json"
        save_poly_map(PolyMap(1, [[(1.0, (1,)), (0.2, (2,))]]), path)
        document = run_json(
            capsys, "verify", "random-poly", "--map-file", str(path), "--samples", "256"
        )
        assert document["passed"] is True
        assert len(document["cases"]) == 1
        assert document["manifest"]["parameters"]["map_file"] == str(path)

    def test_unknown_suite(self, capsys):
        code, out, err = run(capsys, "verify", "bogus")
        assert code == 2
        assert out == ""
        assert "bogus" in err

    def test_map_file_not_accepted(self, capsys, tmp_path):
        path = tmp_path / "map.json"
        save_poly_map(PolyMap.identity(1), path)
        code, _, err = run(capsys, "verify", "extremal", "--map-file", str(path))
        assert code == 2
        assert "не принимает" in err

    def test_bad_map_file(self, capsys, tmp_path):
        path = tmp_path / "map.json"
        path.write_text("[]", encoding="utf-8")
        code, _, err = run(capsys, "verify", "random-poly", "--map-file", str(path))
        assert code == 2
        assert "Ошибка загрузки файла" in err

    def test_violations_exit_one(self, capsys, monkeypatch):
        failing = BoundReport(10, 2, -0.5, [[0.1, 0.0]], 1e-9)

        def fake_run_suite(*args, **kwargs):
            return [("broken", failing)]

        monkeypatch.setattr(cli, "run_suite", fake_run_suite)
        code, out, err = run(capsys, "verify", "extremal")
        assert code == 1
        assert json.loads(out)["passed"] is False
        assert "нарушений 2" in err

    def test_numerical_failure_exit_one(self, capsys, monkeypatch):
        def failing_run_suite(*args, **kwargs):
            raise SolverError("нет сходимости", bracket=(0.1, 0.2))

        monkeypatch.setattr(cli, "run_suite", failing_run_suite)
        code, out, err = run(capsys, "verify", "extremal")
        assert code == 1
        assert out == ""
        assert "Численный сбой" in err


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert out.strip() == f"bloch_lab {__version__}"


def test_missing_command(capsys):
    code, _, err = run(capsys)
    assert code == 2
    assert "usage" in err
