import json

import pytest

from khovlap.cli import main

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpectra:
    def test_json_output(self, capsys):
        code, out, err = run(capsys, "spectra", TREFOIL)
        assert code == 0
        payload = json.loads(out)
        assert payload["all_symmetric"] is False
        assert any((c["r"], c["q"]) == (0, 3) for c in payload["cells"])

    def test_cell_restriction(self, capsys):
        code, out, _ = run(capsys, "spectra", TREFOIL, "--r", "0", "--q", "3")
        payload = json.loads(out)
        assert [(c["r"], c["q"]) for c in payload["cells"]] == [(0, 3)]
        cell = payload["cells"][0]
        assert cell["spectrum"] == [0, 6]
        assert cell["betti"] == 1
        assert cell["lambda"] == 6

    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "spectra", TREFOIL, "--format", "csv")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "r,q,betti,lambda,eigenvalues"
        row = next(line for line in lines if line.startswith("0,3,"))
        assert row == "0,3,1,6,0 6"

    def test_invalid_pd_exit_code_and_offset(self, capsys):
        code, _, err = run(capsys, "spectra", "X[1,4,2,5] Y[3,6,4,1]")
        assert code == 2
        assert "byte 11" in err

    def test_invalid_diagram_exit_code(self, capsys):
        # valid syntax, but edge labels do not form closed strands
        code, _, err = run(capsys, "spectra", "X[1,2,3,4]")
        assert code == 2
        assert "error:" in err

    def test_cache_round_trip(self, capsys, tmp_path):
        args = ("spectra", TREFOIL, "--cache-dir", str(tmp_path))
        _, first, _ = run(capsys, *args)
        cached_files = list(tmp_path.glob("*.json"))
        assert len(cached_files) == 1
        _, second, _ = run(capsys, *args)
        assert first == second


class TestBatch:
    def test_table_run(self, capsys, tmp_path):
        table = tmp_path / "knots.txt"
        table.write_text(
            "3_1: X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n"
            "4_1: X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]\n"
        )
        code, out, err = run(capsys, "batch", str(table))
        assert code == 0
        payload = json.loads(out)
        names = [rep["knot"] for rep in payload["knots"]]
        assert names == ["3_1", "4_1"]
        assert payload["summary"] == {"symmetric": 1, "asymmetric": 1, "failed": 0}

    def test_bad_entry_fails_batch(self, capsys, tmp_path):
        table = tmp_path / "knots.txt"
        table.write_text(
            "3_1: X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n"
            "bad: X[1,2,3,4]\n"
        )
        code, out, err = run(capsys, "batch", str(table))
        assert code == 1
        assert "bad: FAILED" in err
        payload = json.loads(out)
        assert [rep["knot"] for rep in payload["knots"]] == ["3_1"]
        assert payload["summary"]["failed"] == 1

    def test_missing_table_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "batch", str(tmp_path / "nope.txt"))
        assert code == 2


class TestHeatmap:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "heatmap", TREFOIL)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "r,q,lambda,betti"
        assert any(line.startswith("0,3,6,1") for line in lines)
