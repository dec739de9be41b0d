import json

import pytest

from conftest import cycle_graph, path_graph, star_graph
from lapmatch.cli import main
from lapmatch.graphs import write_graph6


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    lines = [json.loads(line) for line in captured.out.splitlines() if line]
    return code, lines, captured.err


@pytest.fixture
def corpus_file(tmp_path):
    def write(name, graphs, header=False, extra_lines=()):
        path = tmp_path / name
        lines = ([">>graph6<<"] if header else []) + [write_graph6(g) for g in graphs]
        lines += list(extra_lines)
        path.write_text("\n".join(lines) + "\n")
        return str(path)

    return write


class TestPoly:
    def test_laplacian(self, capsys, corpus_file):
        path = corpus_file("c3.g6", [cycle_graph(3)], header=True)
        code, lines, _ = run_cli(capsys, "poly", path)
        assert code == 0
        assert lines[0]["coefficients"] == [-2, 9, -6, 1]
        assert lines[0]["b"] == [1, 6, 9, 2]

    def test_matching_kind(self, capsys, corpus_file):
        path = corpus_file("p3.g6", [path_graph(3)])
        code, lines, _ = run_cli(capsys, "poly", path, "--kind", "matching")
        assert code == 0 and lines[0]["coefficients"] == [0, -2, 0, 1]

    def test_parse_error_exit_2(self, capsys, corpus_file):
        path = corpus_file("bad.g6", [cycle_graph(3)], extra_lines=["%%%"])
        code, lines, err = run_cli(capsys, "poly", path)
        assert code == 2 and len(lines) == 1 and "parse" in err


class TestRoots:
    def test_default_width(self, capsys, corpus_file):
        path = corpus_file("s.g6", [star_graph(4)])
        code, lines, _ = run_cli(capsys, "roots", path)
        assert code == 0
        assert [r["value"] for r in lines[0]["roots"]] == ["4.0", "1.0", "0.0"]

    def test_bad_width_exit_2(self, capsys, corpus_file):
        path = corpus_file("s.g6", [star_graph(4)])
        code, _, _ = run_cli(capsys, "roots", path, "--width", "0")
        assert code == 2


class TestCensus:
    def test_c5(self, capsys, corpus_file):
        path = corpus_file("c5.g6", [cycle_graph(5)])
        code, lines, _ = run_cli(capsys, "census", path, "--i", "5")
        assert code == 0
        assert lines[0]["b_i"] == 2 and lines[0]["spanning_trees"] == 5

    def test_size_cap_exit_4(self, capsys, corpus_file):
        path = corpus_file("c5.g6", [cycle_graph(5)])
        code, _, _ = run_cli(capsys, "census", path, "--i", "5", "--max-size", "4")
        assert code == 4


class TestRatio:
    def test_tree_exit_2(self, capsys, corpus_file):
        path = corpus_file("t.g6", [path_graph(4)])
        code, _, err = run_cli(capsys, "ratio", path)
        assert code == 2 and "domain" in err

    def test_k4(self, capsys, corpus_file):
        from conftest import complete_graph

        path = corpus_file("k4.g6", [complete_graph(4)])
        code, lines, _ = run_cli(capsys, "ratio", path)
        assert code == 0 and lines[0]["holds"] is True


class TestVerify:
    def test_all_pass(self, capsys, corpus_file, atlas):
        path = corpus_file("n4.g6", [g for g in atlas if g.n == 4])
        code, lines, _ = run_cli(capsys, "verify", path, "--suite", "all", "--jobs", "1")
        assert code == 0
        assert lines[-1]["summary"]["passed"] is True

    def test_corrupted_line_exit_2(self, capsys, corpus_file):
        path = corpus_file("bad.g6", [cycle_graph(4)], extra_lines=["@@junk@@"])
        code, lines, _ = run_cli(capsys, "verify", path, "--suite", "identities", "--jobs", "1")
        assert code == 2
        failed = [r for r in lines[:-1] if r.get("error")]
        assert failed and failed[0]["line"] == 2

    def test_max_size_skips_with_note(self, capsys, corpus_file):
        path = corpus_file("mix.g6", [cycle_graph(3), cycle_graph(6)])
        code, lines, _ = run_cli(capsys, "verify", path, "--suite", "roots",
                                 "--jobs", "1", "--max-size", "8")
        assert code == 0
        skipped = [r for r in lines[:-1] if r.get("error", "") and "skipped" in r["error"]]
        assert len(skipped) == 1 and skipped[0]["graph"] == write_graph6(cycle_graph(6))

    def test_invariant_failure_exit_1(self, capsys, corpus_file, monkeypatch):
        from lapmatch import verify as verify_module

        monkeypatch.setitem(
            verify_module._SUITES, "roots", lambda g: ["forced failure for the exit-code test"]
        )
        path = corpus_file("c4.g6", [cycle_graph(4)])
        code, lines, _ = run_cli(capsys, "verify", path, "--suite", "roots", "--jobs", "1")
        assert code == 1 and lines[-1]["summary"]["failed"] == 1


class TestScan:
    def test_c6_nine_reports(self, capsys, corpus_file):
        path = corpus_file("c6.g6", [cycle_graph(6)])
        code, lines, _ = run_cli(capsys, "scan", path, "--jobs", "1")
        assert code == 0
        assert len(lines) == 10  # 9 reports + summary
        assert lines[-1]["summary"]["pairs"] == 9
        assert all(r["obstructions"] for r in lines[:-1])

    def test_empty_file(self, capsys, corpus_file):
        path = corpus_file("empty.g6", [])
        code, lines, _ = run_cli(capsys, "scan", path, "--jobs", "1")
        assert code == 0
        assert lines[-1]["summary"]["graphs"] == 0

    def test_discovery_exit_3(self, capsys, corpus_file, monkeypatch):
        from lapmatch import variation

        real = variation._two_place_identity
        monkeypatch.setattr(variation, "_two_place_identity", lambda *a: True)
        try:
            path = corpus_file("p3.g6", [path_graph(3)])
            code, lines, err = run_cli(capsys, "scan", path, "--jobs", "1")
        finally:
            monkeypatch.setattr(variation, "_two_place_identity", real)
        assert code == 3
        assert lines[-1]["summary"]["two_place"] == 1
        assert "discovery" in err

    def test_malformed_line_continues(self, capsys, corpus_file):
        path = corpus_file("mix.g6", [cycle_graph(4)], extra_lines=["^^^", write_graph6(cycle_graph(5))])
        code, lines, err = run_cli(capsys, "scan", path, "--jobs", "1")
        assert code == 2  # parse error reported, but both good graphs scanned
        assert lines[-1]["summary"]["graphs"] == 2
        assert "line 2" in err

    def test_deterministic_across_jobs(self, capsys, corpus_file, atlas):
        path = corpus_file("n5.g6", [g for g in atlas if g.n == 5][:8])
        code1, lines1, _ = run_cli(capsys, "scan", path, "--jobs", "1")
        code2, lines2, _ = run_cli(capsys, "scan", path, "--jobs", "2")
        assert code1 == code2 == 0 and lines1 == lines2


class TestStdin:
    def test_poly_from_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
        code, lines, _ = run_cli(capsys, "poly", "-")
        assert code == 0 and lines[0]["coefficients"] == [-2, 9, -6, 1]
