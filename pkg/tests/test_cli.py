"""End-to-end command line behaviour: exit codes, file formats, reports."""

import io
import json
from contextlib import redirect_stderr, redirect_stdout

import jsonschema
import pytest

from triadaudit import ReciprocalMatrix, Triad
from triadaudit.cli import main, parse_matrix_file, save_matrix_json
from triadaudit.reporting import report_schema


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def matrix_s(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"matrix": [[1, 1, 3], [1, 1, 2], [0.3333333333, 0.5, 1]]}))
    return str(path)


class TestMatrixFiles:
    def test_json_matrix(self, matrix_s):
        matrix, labels = parse_matrix_file(matrix_s)
        assert matrix.triad() == Triad(1, 3, 2)
        assert labels is None

    def test_json_labels(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps({"matrix": [[1, 2], [0.5, 1]], "labels": ["a", "b"]}))
        matrix, labels = parse_matrix_file(path)
        assert labels == ["a", "b"]
        assert matrix.n == 2

    def test_csv_matrix(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("1,1,3\n1,1,2\n0.3333333333,0.5,1\n")
        matrix, _ = parse_matrix_file(path)
        assert matrix.triad() == Triad(1, 3, 2)

    def test_csv_triad_row(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("1,3,2\n")
        matrix, _ = parse_matrix_file(path)
        assert matrix.triad() == Triad(1, 3, 2)

    def test_complete_lower_fills_reciprocals(self, tmp_path):
        path = tmp_path / "u.csv"
        path.write_text("1,4,8\n0,1,2\n0,0,1\n")
        matrix, _ = parse_matrix_file(path, complete_lower=True)
        assert matrix.entries[1][0] == 0.25
        assert matrix.entries[2][0] == 0.125

    def test_round_trip_is_identical(self, tmp_path):
        original = ReciprocalMatrix.from_rows([[1, 1, 3], [1, 1, 2], [1 / 3, 1 / 2, 1]])
        path = tmp_path / "roundtrip.json"
        save_matrix_json(original, path, labels=["A", "B", "C"])
        parsed, labels = parse_matrix_file(path)
        assert parsed == original
        assert labels == ["A", "B", "C"]


class TestCompute:
    def test_scale_dependent_on_example_matrix(self, matrix_s):
        code, out, _ = run_cli("compute", "--matrix", matrix_s, "--index", "scale_dependent")
        assert code == 0
        assert out.split()[-1].startswith("3.16666666")

    def test_consistent_matrix_natural_is_one(self, tmp_path):
        path = tmp_path / "c.csv"
        path.write_text("2,6,3\n")
        code, out, _ = run_cli("compute", "--matrix", str(path), "--index", "natural")
        assert code == 0
        assert out.split()[-1] == "1"

    def test_four_by_four_rejected(self, tmp_path):
        path = tmp_path / "big.json"
        rows = [[1.0] * 4 for _ in range(4)]
        path.write_text(json.dumps({"matrix": rows}))
        code, _, err = run_cli("compute", "--matrix", str(path))
        assert code == 2
        assert "triads only" in err

    def test_unknown_index_rejected(self, matrix_s):
        code, _, err = run_cli("compute", "--matrix", matrix_s, "--index", "bogus")
        assert code == 2
        assert "valid ids" in err

    def test_unreadable_file(self, tmp_path):
        code, _, err = run_cli("compute", "--matrix", str(tmp_path / "missing.json"))
        assert code == 2
        assert "cannot read" in err

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = run_cli("compute", "--matrix", str(path))
        assert code == 2

    def test_non_reciprocal_rejected_without_completion(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("1,4,8\n0.5,1,2\n0.125,0.5,1\n")
        code, _, err = run_cli("compute", "--matrix", str(path))
        assert code == 2
        assert "reciprocal" in err

    def test_complete_lower_flag(self, tmp_path):
        path = tmp_path / "upper.csv"
        path.write_text("1,4,8\n0,1,2\n0,0,1\n")
        code, out, _ = run_cli("compute", "--matrix", str(path), "--complete-lower", "--index", "natural")
        assert code == 0
        assert out.split()[-1] == "1"

    def test_json_report_validates(self, matrix_s):
        code, out, _ = run_cli("compute", "--matrix", matrix_s, "--json")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, report_schema())
        assert doc["results"]["indices"]["natural"] == 1.5


class TestAudit:
    def test_all_axioms_pass_for_koczkodaj(self):
        code, out, _ = run_cli("audit", "koczkodaj", "--axioms", "all", "--samples", "60", "--seed", "42")
        assert code == 0
        assert "fail" not in out

    def test_strict_exit_code_on_violation(self):
        code, out, _ = run_cli("audit", "scale_dependent", "--axioms", "SI", "--samples", "30", "--strict")
        assert code == 1
        assert "witness" in out

    def test_strict_passes_cleanly(self):
        code, _, _ = run_cli("audit", "natural", "--axioms", "URS,IIP", "--samples", "30", "--strict")
        assert code == 0

    def test_unknown_axiom(self):
        code, _, err = run_cli("audit", "natural", "--axioms", "FOO", "--samples", "10")
        assert code == 2
        assert "unknown axiom" in err

    def test_unknown_index(self):
        code, _, err = run_cli("audit", "bogus", "--samples", "10")
        assert code == 2
        assert "valid ids" in err

    def test_json_report_schema_and_witnesses(self):
        code, out, _ = run_cli(
            "audit", "cx6", "--axioms", "SI", "--samples", "20", "--seed", "7", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, report_schema())
        assert doc["results"]["verdicts"][0]["status"] == "fail"
        assert doc["witnesses"][0]["params"]["k"] == 2
        assert doc["config"]["master_seed"] == 7

    def test_byte_determinism(self):
        args = ("audit", "natural", "--axioms", "all", "--samples", "50", "--seed", "42", "--json")
        _, first, _ = run_cli(*args)
        _, second, _ = run_cli(*args)
        assert first == second


class TestIndependence:
    def test_matches_expected_pattern(self):
        code, out, _ = run_cli("independence", "--samples", "60", "--seed", "42")
        assert code == 0
        assert "matches expected diagonal: yes" in out

    def test_json_report(self):
        code, out, _ = run_cli("independence", "--samples", "40", "--seed", "42", "--json")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, report_schema())
        assert doc["results"]["matches_expected"] is True
        assert len(doc["results"]["rows"]) == 6

    def test_byte_determinism(self):
        args = ("independence", "--samples", "30", "--seed", "1", "--json")
        _, first, _ = run_cli(*args)
        _, second, _ = run_cli(*args)
        assert first == second


class TestConcordance:
    def test_monotone_pair(self):
        code, out, _ = run_cli("concordance", "natural", "koczkodaj", "--samples", "400")
        assert code == 0
        assert "discordant   0" in out
        assert "kendall tau-b 1" in out

    def test_json_report(self):
        code, out, _ = run_cli("concordance", "natural", "discretised_natural", "--samples", "400", "--json")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, report_schema())
        assert doc["results"]["discordant"] == 0
        assert doc["results"]["ties_b_only"] > 0

    def test_unknown_id(self):
        code, _, err = run_cli("concordance", "natural", "bogus", "--samples", "10")
        assert code == 2

    def test_byte_determinism(self):
        args = ("concordance", "natural", "scale_dependent", "--samples", "200", "--json")
        _, first, _ = run_cli(*args)
        _, second, _ = run_cli(*args)
        assert first == second


class TestSeedResolution:
    def test_env_seed_used(self, monkeypatch):
        monkeypatch.setenv("PCM_SEED", "123")
        _, out, _ = run_cli("audit", "natural", "--axioms", "URS", "--samples", "10", "--json")
        assert json.loads(out)["config"]["master_seed"] == 123

    def test_flag_overrides_env(self, monkeypatch):
        monkeypatch.setenv("PCM_SEED", "123")
        _, out, _ = run_cli("audit", "natural", "--axioms", "URS", "--samples", "10", "--seed", "9", "--json")
        assert json.loads(out)["config"]["master_seed"] == 9

    def test_invalid_env_seed(self, monkeypatch):
        monkeypatch.setenv("PCM_SEED", "not-a-number")
        code, _, err = run_cli("audit", "natural", "--axioms", "URS", "--samples", "10")
        assert code == 2
        assert "PCM_SEED" in err

    def test_default_seed(self, monkeypatch):
        monkeypatch.delenv("PCM_SEED", raising=False)
        _, out, _ = run_cli("audit", "natural", "--axioms", "URS", "--samples", "10", "--json")
        assert json.loads(out)["config"]["master_seed"] == 42


def test_usage_error_exits_two():
    code, _, _ = run_cli("audit")  # missing index argument
    assert code == 2


def test_unknown_command_exits_two():
    code, _, _ = run_cli("frobnicate")
    assert code == 2
