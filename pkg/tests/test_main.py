"""Tests for the command-line entry point."""

import json

import pytest

from src.main import EXIT_FAILURE, EXIT_MALFORMED, EXIT_OK, main
from src.pipeline.fixtures import EXCLUDED_CORPUS, FIXTURE_NAMES, emit_fixtures


@pytest.fixture
def corpus_file(tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text(emit_fixtures(list(EXCLUDED_CORPUS)))
    return path


@pytest.fixture
def broken_file(tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text(emit_fixtures(["triangle"]) + "\ngraph broken 2\n1: 3\n2: 1\n")
    return path


class TestFilterCommand:
    """Test ``filter``."""

    def test_excluded_corpus(self, corpus_file, tmp_path):
        out, stats = tmp_path / "out.jsonl", tmp_path / "stats.json"
        code = main(
            ["filter", "--input", str(corpus_file), "--output", str(out), "--stats", str(stats)]
        )
        assert code == EXIT_OK
        reports = [json.loads(line) for line in out.read_text().splitlines()]
        assert len(reports) == len(EXCLUDED_CORPUS)
        assert all(r["excluded"] for r in reports)
        assert json.loads(stats.read_text())["excluded_count"] == len(EXCLUDED_CORPUS)

    def test_stats_to_stderr(self, corpus_file, capsys):
        assert main(["filter", "--input", str(corpus_file), "--criteria", "area"]) == EXIT_OK
        captured = capsys.readouterr()
        assert len(captured.out.splitlines()) == len(EXCLUDED_CORPUS)
        assert '"kind":"stats"' in captured.err

    def test_lenient_malformed(self, broken_file, capsys):
        assert main(["filter", "--input", str(broken_file), "--lenient"]) == EXIT_MALFORMED
        kinds = [json.loads(line)["kind"] for line in capsys.readouterr().out.splitlines()]
        assert kinds == ["graph", "error"]

    def test_strict_malformed(self, broken_file, capsys):
        assert main(["filter", "--input", str(broken_file)]) == EXIT_MALFORMED
        assert "Malformed input" in capsys.readouterr().err

    def test_strict_malformed_writes_partial_stats(self, broken_file, tmp_path):
        stats = tmp_path / "stats.json"
        code = main(["filter", "--input", str(broken_file), "--stats", str(stats)])
        assert code == EXIT_MALFORMED
        partial = json.loads(stats.read_text())
        assert partial["graphs_read"] == 2
        assert partial["survivor_count"] == 1
        assert partial["error_count"] == 1

    def test_missing_input(self, tmp_path):
        assert main(["filter", "--input", str(tmp_path / "nope.txt")]) == EXIT_FAILURE

    def test_unknown_criterion(self, corpus_file):
        assert main(["filter", "--input", str(corpus_file), "--criteria", "volume"]) == EXIT_FAILURE

    def test_bad_jobs(self, corpus_file):
        assert main(["filter", "--input", str(corpus_file), "--jobs", "0"]) == EXIT_FAILURE

    def test_invalid_environment(self, corpus_file, monkeypatch):
        monkeypatch.setenv("MATCHSTICK_LP_BOUND", "tight")
        assert main(["filter", "--input", str(corpus_file)]) == EXIT_FAILURE

    def test_dump_lp_dir(self, tmp_path):
        source = tmp_path / "square.txt"
        source.write_text(emit_fixtures(["square"]))
        dump = tmp_path / "lps"
        code = main(
            ["filter", "--input", str(source), "--criteria", "lp", "--dump-lp", str(dump),
             "--output", str(tmp_path / "out.jsonl"), "--stats", str(tmp_path / "s.json")]
        )
        assert code == EXIT_OK
        assert len(list(dump.iterdir())) == 2

    def test_summary_and_timing(self, corpus_file, tmp_path, capsys):
        out = tmp_path / "out.jsonl"
        code = main(
            ["filter", "--input", str(corpus_file), "--output", str(out), "--summary", "--timing"]
        )
        assert code == EXIT_OK
        assert all("elapsed_ms" in json.loads(line) for line in out.read_text().splitlines())
        assert "excluded" in capsys.readouterr().err.lower()


class TestFixturesCommand:
    """Test ``fixtures``."""

    def test_single(self, capsys):
        assert main(["fixtures", "triangle"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("graph triangle 3\n")

    def test_all(self, tmp_path):
        out = tmp_path / "all.txt"
        assert main(["fixtures", "--all", "--output", str(out)]) == EXIT_OK
        lines = out.read_text().splitlines()
        headers = [line.split()[1] for line in lines if line.startswith("graph")]
        assert tuple(headers) == FIXTURE_NAMES

    @pytest.mark.parametrize("name, n", [("capped-grid", 13), ("pentagon-bridge", 14)])
    def test_block_header(self, capsys, name, n):
        assert main(["fixtures", name]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[0] == f"graph {name} {n}"

    def test_list(self, capsys):
        assert main(["fixtures", "--list"]) == EXIT_OK
        assert "pentagon-bridge" in capsys.readouterr().err

    def test_nothing_requested(self):
        assert main(["fixtures"]) == EXIT_FAILURE


class TestLatticeCommand:
    """Test ``gen-lattice``."""

    def test_text(self, capsys):
        assert main(["gen-lattice", "--seed", "1", "--count", "3", "--size", "6"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.count("graph lattice-") == 3

    def test_planar_code(self, tmp_path):
        out = tmp_path / "lattice.pc"
        code = main(
            ["gen-lattice", "--count", "2", "--format", "planar_code", "--output", str(out)]
        )
        assert code == EXIT_OK
        assert out.read_bytes().startswith(b">>planar_code")

    def test_size_too_small(self):
        assert main(["gen-lattice", "--size", "2"]) == EXIT_FAILURE


class TestDumpLPCommand:
    """Test ``dump-lp``."""

    def test_drawn_outer_face(self, capsys):
        assert main(["dump-lp", "square"]) == EXIT_OK
        assert "around_1" in capsys.readouterr().out

    def test_solve(self, capsys):
        assert main(["dump-lp", "pentagon-bridge", "--lp-bound", "paper", "--solve"]) == EXIT_OK
        assert "reject" in capsys.readouterr().err

    def test_bad_outer_face(self):
        assert main(["dump-lp", "square", "--outer", "9"]) == EXIT_FAILURE
