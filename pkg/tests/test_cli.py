"""Command-line interface: exit codes, report artifacts, comparison."""

import json

import pytest

from syngauntlet.cli import main

from helpers import base_suite_doc, tie_fixture_doc


@pytest.fixture
def suite_file(tmp_path):
    path = tmp_path / "fixture.json"
    path.write_text(json.dumps(base_suite_doc(), ensure_ascii=False), encoding="utf-8")
    return path


@pytest.fixture
def corpus_file(tmp_path):
    path = tmp_path / "toy.txt"
    path.write_text("el gato duerme\nla casa brilla\nel perro corre\n", encoding="utf-8")
    return path


class TestValidate:
    def test_shipped_suites_clean(self, capsys):
        assert main(["validate"]) == 0
        out = capsys.readouterr().out
        assert out.count(": OK") == 26

    def test_seeded_bad_suite(self, tmp_path, capsys):
        doc = base_suite_doc()
        doc["predictions"] = ["(9;match) < (2;mismatch)"]
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc), encoding="utf-8")
        assert main(["validate", str(bad)]) == 1
        assert "DanglingRegionRef" in capsys.readouterr().out

    def test_missing_path(self, capsys):
        assert main(["validate", "/no/such/place/*.json"]) == 2


class TestRun:
    def test_uniform_on_tie_fixture(self, tmp_path, capsys):
        doc = tie_fixture_doc()
        path = tmp_path / "ties.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        out = tmp_path / "report.json"
        code = main([
            "run", str(path), "--scorer", "uniform", "--vocab-size", "1024",
            "--format", "json", "--out", str(out),
        ])
        assert code == 0
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["overall"] == 0.0

    def test_json_reports_byte_identical(self, suite_file, corpus_file, tmp_path):
        args = [
            "run", str(suite_file), "--scorer", "ngram", "--corpus", str(corpus_file),
            "--order", "2", "--lambdas", "0.7,0.3", "--format", "json",
        ]
        out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
        assert main(args + ["--out", str(out1)]) == 0
        assert main(args + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_invalid_suite_rejected(self, tmp_path):
        doc = base_suite_doc()
        del doc["items"][0]["conditions"]["mismatch"]
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        assert main(["run", str(path), "--scorer", "uniform"]) == 2

    def test_no_suites_selected(self, suite_file):
        assert main(["run", str(suite_file), "--language", "tlh"]) == 2

    def test_config_file_precedence(self, suite_file, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"scorer": "uniform", "vocab_size": 64,
                                      "format": "csv"}), encoding="utf-8")
        assert main(["run", str(suite_file), "--config", str(config)]) == 0
        out = capsys.readouterr().out
        assert out.startswith("suite,circuit,language")

    def test_table_format_groups_by_circuit(self, suite_file, capsys):
        assert main(["run", str(suite_file), "--scorer", "uniform"]) == 0
        out = capsys.readouterr().out
        assert "Agreement" in out and "overall" in out

    def test_circuit_filter_on_shipped_set(self, tmp_path):
        out = tmp_path / "agreement.json"
        code = main([
            "run", "--scorer", "uniform", "--circuit", "agreement",
            "--format", "json", "--out", str(out),
        ])
        assert code == 0
        report = json.loads(out.read_text(encoding="utf-8"))
        assert len(report["suites"]) == 9
        assert all(s["circuit"] == "Agreement" for s in report["suites"])


class TestCompare:
    def _write_report(self, tmp_path, suite_file, corpus_file, name, lambdas):
        out = tmp_path / name
        code = main([
            "run", str(suite_file), "--scorer", "ngram", "--corpus", str(corpus_file),
            "--order", "2", "--lambdas", lambdas, "--format", "json", "--out", str(out),
        ])
        assert code == 0
        return out

    def test_two_reports(self, tmp_path, suite_file, corpus_file, capsys):
        r1 = self._write_report(tmp_path, suite_file, corpus_file, "r1.json", "0.7,0.3")
        r2 = self._write_report(tmp_path, suite_file, corpus_file, "r2.json", "0.5,0.5")
        assert main(["compare", str(r1), str(r2)]) == 0
        out = capsys.readouterr().out
        assert "overall" in out

    def test_mismatched_suites(self, tmp_path, suite_file, corpus_file, capsys):
        r1 = self._write_report(tmp_path, suite_file, corpus_file, "r1.json", "0.7,0.3")
        doc = base_suite_doc()
        doc["name"] = "other-suite"
        other = tmp_path / "other.json"
        other.write_text(json.dumps(doc), encoding="utf-8")
        r2 = self._write_report(tmp_path, other, corpus_file, "r2.json", "0.7,0.3")
        assert main(["compare", str(r1), str(r2)]) == 1

    def test_single_report_rejected(self, tmp_path, suite_file, corpus_file):
        r1 = self._write_report(tmp_path, suite_file, corpus_file, "r1.json", "0.7,0.3")
        assert main(["compare", str(r1)]) == 2
