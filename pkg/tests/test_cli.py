"""Command line interface: exit codes, formats, determinism, schema."""

import json

import jsonschema
import pytest

from brickforge.families import cubeplex
from brickforge.harness.cli import main
from brickforge.harness.io import emit_edge_list, emit_sparse6
from brickforge.harness.report import load_report_schema

from conftest import cycle, path


@pytest.fixture()
def run(capsys, monkeypatch):
    def invoke(argv, stdin=None):
        if stdin is not None:
            import io as _io

            monkeypatch.setattr("sys.stdin", _io.StringIO(stdin))
        code = main(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


class TestFamily:
    def test_edges_format(self, run):
        code, out, _ = run(["family", "k4"])
        assert code == 0
        assert out == "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"

    def test_s6_format(self, run):
        from brickforge.families import prism
        from brickforge.harness.io import parse_sparse6
        from conftest import edge_multiset

        code, out, _ = run(["family", "prism", "10", "--format", "s6"])
        assert code == 0
        assert edge_multiset(parse_sparse6(out.strip())) == edge_multiset(prism(10))

    def test_bad_size(self, run):
        code, _, err = run(["family", "prism", "8"])
        assert code == 2
        assert "error" in err

    def test_bad_name(self, run):
        code, _, _ = run(["family", "dodecahedron"])
        assert code == 2


class TestClassify:
    def test_cubeplex_record(self, run):
        code, out, _ = run(["classify", "-"], stdin=emit_edge_list(cubeplex()))
        assert code == 0
        record = json.loads(out)
        assert record["e2"] == 14
        assert record["brick"] is True

    def test_non_brick_exits_3(self, run):
        code, out, _ = run(["classify", "-"], stdin=emit_edge_list(cycle(6)))
        assert code == 3
        record = json.loads(out)
        assert record["brick"] is False

    def test_parse_error_exits_2(self, run):
        code, _, err = run(["classify", "-"], stdin="not a graph\n")
        assert code == 2
        assert "error" in err

    def test_file_input(self, run, tmp_path):
        target = tmp_path / "g.s6"
        target.write_text(emit_sparse6(cubeplex()) + "\n")
        code, out, _ = run(["classify", str(target)])
        assert code == 0
        assert json.loads(out)["order"] == 12

    def test_pretty(self, run):
        code, out, _ = run(["classify", "--pretty", "-"], stdin=emit_edge_list(cubeplex()))
        assert code == 0
        assert "e2" in out and "14" in out


class TestDecompose:
    def test_k4(self, run):
        code, out, _ = run(["decompose", "-"], stdin="4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
        assert code == 0
        assert "piece 1: brick" in out
        assert "b=1 p=0" in out

    def test_c6_braces(self, run):
        code, out, _ = run(["decompose", "-"], stdin=emit_edge_list(cycle(6)))
        assert code == 0
        assert out.count("brace") == 2
        assert "b=0 p=0" in out

    def test_not_matching_covered_exits_3(self, run):
        code, _, err = run(["decompose", "-"], stdin=emit_edge_list(path(4)))
        assert code == 3
        assert "matching covered" in err


class TestSweep:
    def test_max_n8_ok(self, run):
        code, out, _ = run(["sweep", "--max-n", "8"])
        assert code == 0
        lines = [json.loads(line) for line in out.strip().split("\n")]
        summary = lines[-1]
        assert summary["type"] == "summary"
        assert summary["ok"] is True
        assert summary["graph_count"] == 8
        equality = [(e["order"], e["family"]) for e in summary["equality"]]
        assert equality == [(8, "moebius")]

    def test_records_validate_against_schema(self, run):
        code, out, _ = run(["sweep", "--max-n", "6"])
        assert code == 0
        schema = load_report_schema()
        validator = jsonschema.Draft202012Validator(schema)
        for line in out.strip().split("\n"):
            validator.validate(json.loads(line))

    def test_byte_identical_reruns_and_jobs(self, run):
        _, out1, _ = run(["sweep", "--max-n", "8"])
        _, out2, _ = run(["sweep", "--max-n", "8"])
        _, out3, _ = run(["sweep", "--max-n", "8", "--jobs", "2"])
        assert out1 == out2 == out3

    def test_bad_max_n(self, run):
        code, _, err = run(["sweep", "--max-n", "16"])
        assert code == 2
        assert "max-n" in err

    def test_missing_max_n(self, run):
        code, _, _ = run(["sweep"])
        assert code == 2

    def test_pretty(self, run):
        code, out, _ = run(["sweep", "--max-n", "6", "--pretty"])
        assert code == 0
        assert "ok=True" in out


class TestClassifyRecordSchema:
    def test_classify_output_validates(self, run):
        schema = load_report_schema()
        validator = jsonschema.Draft202012Validator(schema)
        for g in (cubeplex(), cycle(6), path(4)):
            _, out, _ = run(["classify", "-"], stdin=emit_edge_list(g))
            validator.validate(json.loads(out))
