from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from bei.graphs import encode_graph6
from bei.report import build_report

from conftest import complete_bipartite, cycle_graph, disjoint_union, path_graph


def run_cli(*args, **kw):
    return subprocess.run(
        [sys.executable, "-m", "bei", *args],
        capture_output=True,
        text=True,
        **kw,
    )


@pytest.fixture
def p4_file(tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("4\n1 2\n2 3\n3 4\n")
    return f


class TestInvariantsCommand:
    def test_p4_json(self, p4_file):
        proc = run_cli("invariants", str(p4_file), "--json")
        assert proc.returncode == 0
        rep = json.loads(proc.stdout)
        assert rep["kappa"] == 1
        assert rep["toughness"] == {
            "type": "finite",
            "num": "1",
            "den": "2",
            "witness": [2],
        }
        assert rep["krull_dimension"] == 5
        assert rep["hilbert_samuel"] == "8"
        assert rep["hilbert_kunz"] == {"num": "47", "den": "10"}
        assert rep["screen"]["status"] == "cm-certified"
        assert rep["screen"]["certifications"][0]["rule"] == "disjoint-paths-CI"

    def test_k5_values(self, tmp_path):
        f = tmp_path / "k5.txt"
        f.write_text("5\n" + "\n".join(f"{i} {j}" for i in range(1, 6) for j in range(i + 1, 6)))
        rep = json.loads(run_cli("invariants", str(f), "--json").stdout)
        assert rep["hilbert_samuel"] == "5"
        assert Fraction(int(rep["hilbert_kunz"]["num"]), int(rep["hilbert_kunz"]["den"])) == Fraction(361, 144)
        assert rep["toughness"] == {"type": "infinite"}
        assert rep["depth_upper_bound"] is None

    def test_disconnected(self, tmp_path):
        f = tmp_path / "2k2.txt"
        f.write_text("4\n1 2\n3 4\n")
        rep = json.loads(run_cli("invariants", str(f), "--json").stdout)
        assert rep["toughness"] is None and rep["kappa"] is None
        assert rep["hilbert_samuel"] == "4"

    def test_human_readable(self, p4_file):
        proc = run_cli("invariants", str(p4_file))
        assert proc.returncode == 0
        assert "toughness           1/2" in proc.stdout
        assert "cm-certified" in proc.stdout

    def test_graph6_input(self, tmp_path):
        f = tmp_path / "c4.g6"
        f.write_text(encode_graph6(cycle_graph(4)) + "\n")
        rep = json.loads(
            run_cli("invariants", str(f), "--format", "graph6", "--json").stdout
        )
        assert rep["kappa"] == 2 and rep["equidimensional"] is False

    def test_parse_error_exit_2(self, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("3\n1 1\n")
        proc = run_cli("invariants", str(f))
        assert proc.returncode == 2
        assert "self-loop" in proc.stderr

    def test_oversize_exit_3(self, tmp_path):
        f = tmp_path / "big.txt"
        f.write_text("25\n1 2\n")
        proc = run_cli("invariants", str(f))
        assert proc.returncode == 3

    def test_max_n_flag_lifts_cap(self, tmp_path):
        f = tmp_path / "n25.txt"
        f.write_text("25\n" + "\n".join(f"{i} {i+1}" for i in range(1, 25)))
        proc = run_cli("primes", str(f), "--max-n", "26")
        assert proc.returncode == 0

    def test_json_roundtrip_exact(self, p4_file):
        out = run_cli("invariants", str(p4_file), "--json").stdout
        parsed = json.loads(out)
        assert parsed == build_report(path_graph(4))
        assert json.loads(json.dumps(parsed)) == parsed


class TestPrimesCommand:
    def test_k23_listing(self, tmp_path):
        f = tmp_path / "k23.txt"
        f.write_text("5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n")
        proc = run_cli("primes", str(f))
        lines = proc.stdout.strip().splitlines()
        assert len(lines) == 3
        assert lines[0].startswith("S={}  dim=6")
        assert lines[1].startswith("S={1,2}  dim=6")
        assert lines[2].startswith("S={3,4,5}  dim=4")

    def test_k4_single_prime(self, tmp_path):
        f = tmp_path / "k4.txt"
        f.write_text("4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
        lines = run_cli("primes", str(f)).stdout.strip().splitlines()
        assert lines == ["S={}  dim=5  blocks: {1,2,3,4}"]

    def test_p3(self, tmp_path):
        f = tmp_path / "p3.txt"
        f.write_text("3\n1 2\n2 3\n")
        lines = run_cli("primes", str(f)).stdout.strip().splitlines()
        assert lines[0].startswith("S={}  dim=4")
        assert lines[1].startswith("S={2}  dim=4")


class TestScreenCommand:
    def _write_corpus(self, path, graphs):
        path.write_text("".join(encode_graph6(g) + "\n" for g in graphs))

    def test_basic_screen(self, tmp_path):
        corpus = tmp_path / "corpus.g6"
        self._write_corpus(
            corpus, [cycle_graph(4), path_graph(5), complete_bipartite(2, 3)]
        )
        out = tmp_path / "out.jsonl"
        proc = run_cli("screen", str(corpus), "--out", str(out))
        assert proc.returncode == 0
        records = [json.loads(line) for line in out.read_text().splitlines()]
        assert [r["line"] for r in records] == [1, 2, 3]
        c4 = records[0]["report"]["screen"]
        assert c4["status"] == "not-cm-certified"
        assert any(v["rule"] == "two-vertex-connected" for v in c4["violations"])
        assert "screened 3 graphs" in proc.stdout

    def test_bad_line_recorded(self, tmp_path):
        corpus = tmp_path / "corpus.g6"
        corpus.write_text("A_\n!!notgraph6\nCl\n")
        out = tmp_path / "out.jsonl"
        proc = run_cli("screen", str(corpus), "--out", str(out))
        assert proc.returncode == 0
        records = [json.loads(line) for line in out.read_text().splitlines()]
        assert "error" in records[1]
        assert records[1]["error"]["kind"] == "bad-char"
        assert "report" in records[0] and "report" in records[2]

    def test_empty_corpus(self, tmp_path):
        corpus = tmp_path / "empty.g6"
        corpus.write_text("")
        out = tmp_path / "out.jsonl"
        proc = run_cli("screen", str(corpus), "--out", str(out))
        assert proc.returncode == 0
        assert out.read_text() == ""
        assert "screened 0 graphs" in proc.stdout

    def test_all_bad_exit_2(self, tmp_path):
        corpus = tmp_path / "bad.g6"
        corpus.write_text("!!\n!!\n")
        out = tmp_path / "out.jsonl"
        proc = run_cli("screen", str(corpus), "--out", str(out))
        assert proc.returncode == 2

    def test_connected5_corpus_consistent(self, tmp_path):
        from conftest import connected_graphs

        corpus = tmp_path / "all5.g6"
        self._write_corpus(corpus, connected_graphs(5))
        out = tmp_path / "out.jsonl"
        proc = run_cli("screen", str(corpus), "--out", str(out))
        assert proc.returncode == 0
        records = [json.loads(line) for line in out.read_text().splitlines()]
        assert len(records) == 728
        for rec in records:
            screen = rec["report"]["screen"]
            # verdicts are internally consistent: never both kinds of evidence
            assert not (screen["certifications"] and screen["violations"])
            expected = (
                "cm-certified"
                if screen["certifications"]
                else "not-cm-certified"
                if screen["violations"]
                else "inconclusive"
            )
            assert screen["status"] == expected

    def test_parallel_determinism(self, tmp_path):
        corpus = tmp_path / "corpus.g6"
        graphs = [cycle_graph(n) for n in range(4, 8)]
        graphs += [path_graph(n) for n in range(2, 8)]
        graphs += [complete_bipartite(2, 3), disjoint_union(path_graph(3), cycle_graph(4))]
        self._write_corpus(corpus, graphs)
        out1 = tmp_path / "seq.jsonl"
        out2 = tmp_path / "par.jsonl"
        assert run_cli("screen", str(corpus), "--out", str(out1)).returncode == 0
        assert (
            run_cli("screen", str(corpus), "--out", str(out2), "--parallel", "3").returncode
            == 0
        )
        assert out1.read_bytes() == out2.read_bytes()


class TestVerifyCommand:
    def test_small_run_passes(self):
        proc = run_cli("verify", "--max-n", "3")
        assert proc.returncode == 0
        assert "[PASS]" in proc.stdout
        assert "[FAIL]" not in proc.stdout

    def test_out_of_range_rejected(self):
        proc = run_cli("verify", "--max-n", "8")
        assert proc.returncode == 2
        proc = run_cli("verify", "--max-n", "2")
        assert proc.returncode == 2
