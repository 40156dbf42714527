import json

import pytest

from slowcolor import cli
from slowcolor.cli import EXIT_CAP, EXIT_FALSIFIED, EXIT_INPUT, EXIT_OK, main, resolve_graph
from slowcolor.graph import GraphError

PRISM_TEXT = "6 9\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n0 3\n1 4\n2 5\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestResolveGraph:
    def test_builtin(self):
        assert resolve_graph("path:4").n == 4

    def test_file(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text(PRISM_TEXT)
        assert resolve_graph(str(path)).n == 6

    def test_neither(self):
        with pytest.raises(GraphError, match="neither"):
            resolve_graph("/no/such/thing")


class TestSolve:
    def test_prism_json(self, capsys):
        code, out, _ = run(capsys, "solve", "--graph", "prism")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["value"] == 12
        assert payload["best_opening"]

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "solve", "--graph", "path:4", "--format", "text")
        assert code == EXIT_OK
        assert "value: 6" in out

    def test_cap_exit_code(self, capsys):
        code, _, err = run(capsys, "solve", "--graph", "path:16", "--strict")
        assert code == EXIT_CAP
        assert "resource cap" in err

    def test_bad_graph_exit_code(self, capsys):
        code, _, err = run(capsys, "solve", "--graph", "/no/such/file")
        assert code == EXIT_INPUT
        assert "error" in err


class TestVerify:
    def test_main_on_prism(self, capsys):
        code, out, _ = run(capsys, "verify", "main", "--graph", "prism")
        assert code == EXIT_OK
        [report] = json.loads(out)
        assert report["conclusion"]["holds"] is True

    def test_text_render(self, capsys):
        code, out, _ = run(
            capsys, "verify", "main", "--graph", "prism", "--format", "text"
        )
        assert code == EXIT_OK
        assert "HOLDS" in out

    def test_all_claims_skip_inapplicable(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "--graph", "prism")
        assert code == EXIT_OK
        reports = json.loads(out)
        claims = {r["claim"] for r in reports}
        assert "main-theorem" in claims and "forest-pipeline" in claims
        assert "tree-characterization" in claims  # present but inapplicable

    def test_sweep(self, capsys):
        code, out, _ = run(
            capsys, "verify", "tree-char", "--sweep", "path:2-6"
        )
        assert code == EXIT_OK
        reports = json.loads(out)
        assert len(reports) == 5
        assert all(r["conclusion"]["holds"] for r in reports)

    def test_requires_graph_or_suite(self, capsys):
        code, _, err = run(capsys, "verify", "main")
        assert code == EXIT_INPUT
        assert "required" in err

    def test_falsified_exit_code(self, capsys, monkeypatch):
        # a lemma check with coverage forced below 100% reports failure
        from slowcolor import verifier

        original = verifier.verify_lemma_kconn
        monkeypatch.setattr(
            verifier,
            "verify_lemma_kconn",
            lambda g, k, budget=None, instance=None: original(
                g, k, budget=1, instance=instance
            ),
        )
        code, out, _ = run(capsys, "verify", "lemma-kconn", "--graph", "prism")
        assert code == EXIT_FALSIFIED


class TestConstruct:
    def test_prism_paper_branch(self, capsys):
        code, out, _ = run(
            capsys, "construct", "--graph", "prism",
            "--matching", "0-3,1-4,2-5", "--delete", "3,4",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["deleted"] == [2, 3]  # labels "3","4" are indices 2,3
        assert payload["beta_vertices"] == [0, 5]  # orphaned rung partners
        degrees = payload["certificate"]["degrees"]
        assert all(d in (1, 3) for d in degrees.values())

    def test_default_matching_search(self, capsys):
        code, out, _ = run(
            capsys, "construct", "--graph", "prism", "--delete", "1,5"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload["matching"]) == 3
        assert payload["deleted"] == [0, 4]

    def test_dependent_delete_rejected(self, capsys):
        code, _, err = run(
            capsys, "construct", "--graph", "prism", "--delete", "1,2"
        )
        # labels "1","2" are adjacent triangle vertices
        assert code == EXIT_INPUT
        assert "independent" in err

    def test_no_perfect_matching(self, capsys):
        code, _, err = run(capsys, "construct", "--graph", "star:4")
        assert code == EXIT_INPUT
        assert "matching" in err


def _optimal_painter_input(g):
    """Input stub answering every Painter prompt with the exact reply."""
    from slowcolor import solver
    from slowcolor.graph import bits

    eng = solver.get_solver(g)
    shadow = {"rem": g.all_vertices}

    def answer(prompt):
        mark = eng.best_mark(shadow["rem"])
        reply = eng.best_reply(shadow["rem"], mark)
        shadow["rem"] &= ~reply
        return ",".join(g.label(v) for v in bits(reply))

    return answer


class TestPlay:
    def test_painter_session(self, capsys, monkeypatch):
        from slowcolor import families

        monkeypatch.setattr(
            "builtins.input", _optimal_painter_input(families.prism())
        )
        code, out, _ = run(capsys, "play", "--graph", "prism")
        assert code == EXIT_OK
        assert "final score: 12" in out
        assert "theorem bound 3n/2 + k = 10: met" in out

    def test_transcript_written(self, capsys, tmp_path, monkeypatch):
        from slowcolor import families

        monkeypatch.setattr(
            "builtins.input", _optimal_painter_input(families.path(4))
        )
        out_path = tmp_path / "t.json"
        code, out, _ = run(
            capsys, "play", "--graph", "path:4", "--transcript", str(out_path)
        )
        assert code == EXIT_OK
        transcript = json.loads(out_path.read_text())
        assert transcript["remaining"] == [] and transcript["score"] == 6

    def test_abort_dumps_partial(self, capsys, monkeypatch):
        def eof(prompt):
            raise EOFError

        monkeypatch.setattr("builtins.input", eof)
        code, out, _ = run(capsys, "play", "--graph", "prism", "--role", "lister")
        assert code == EXIT_INPUT
        assert "aborted" in out
