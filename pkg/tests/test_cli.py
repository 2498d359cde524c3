"""
运行器与命令行测试：报告内容、退出码和输出格式
"""

import json

import pytest

from src.cli import main
from src.core.axioms import MOVE_GROUPS
from src.core.output import ReportWriter
from src.core.runner import EXIT_FAILED, EXIT_INPUT, EXIT_OK, EXIT_USAGE, InvariantRunner
from src.core.utils.exceptions import UsageError

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def _run_json(capsys, *argv):
    code = main(list(argv) + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_compute_tri_for_seven_four(capsys):
    """测试 compute 子命令"""
    code, report = _run_json(capsys, "compute", "--invariant", "tri", "--knot", "7_4")
    assert code == EXIT_OK
    assert report["tri"] == 9
    assert report["crossings"] == 7
    assert report["ok"] is True


def test_compute_jones_inline_pd(capsys):
    code, report = _run_json(capsys, "compute", "--invariant", "jones", "--pd", TREFOIL_PD)
    assert code == EXIT_OK
    assert report["variable"] == "t"
    assert report["writhe"] == -3


def test_compute_enhanced_lists_values(capsys):
    code, report = _run_json(capsys, "compute", "--invariant", "nor", "--conway", "2 2")
    assert code == EXIT_OK
    assert report["scheme"] == "nor"
    assert len(report["values"]) == 2
    assert sum(report["multiset"].values()) == 2


def test_verify_axioms_for_both_schemes(capsys):
    for scheme in ("symbolic", "nor"):
        code, report = _run_json(capsys, "verify", "axioms", "--scheme", scheme)
        assert code == EXIT_OK, scheme
        checks = {item["check"]: item["ok"] for item in report["items"]}
        assert checks == {
            "r2": True, "r3": True, "closures": True,
            "kink": True, "loop-table": True, "coloring-table": True,
        }


def test_verify_tri_jones_over_table(capsys):
    code, report = _run_json(capsys, "verify", "tri-jones")
    assert code == EXIT_OK
    assert len(report["items"]) >= 6
    for item in report["items"]:
        assert item["ok"], item
        assert item["tri"] == pytest.approx(item["three_abs_v_squared"], abs=1e-6)


def test_verify_moves_on_trefoil(capsys):
    code, report = _run_json(capsys, "verify", "moves", "--pd", TREFOIL_PD, "--seed", "7",
                             "--count", "10", "--invariant", "enhanced,jones")
    assert code == EXIT_OK
    assert report["seed"] == 7
    assert [item["invariant"] for item in report["items"]] == ["enhanced", "jones"]
    assert all(len(item["moves"]) == 10 for item in report["items"])


def test_verify_moves_is_reproducible(capsys):
    argv = ("verify", "moves", "--knot", "4_1", "--seed", "3", "--count", "5", "--moves", "r2,r3")
    _, first = _run_json(capsys, *argv)
    _, second = _run_json(capsys, *argv)
    assert first == second
    allowed = {kind.value for group in ("r2", "r3") for kind in MOVE_GROUPS[group]}
    for check in first["items"][0]["moves"]:
        assert check["move"].split()[0] in allowed


def test_table_subcommand(capsys):
    code, report = _run_json(capsys, "table")
    assert code == EXIT_OK
    assert all(item["mismatches"] == [] for item in report["items"])


def test_table_mismatch_exits_with_failure(tmp_path, capsys):
    path = tmp_path / "wrong.jsonl"
    path.write_text(json.dumps({"name": "3_1", "pd": [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]],
                                "expected": {"tri": 3}}) + "\n", encoding="utf-8")
    code, report = _run_json(capsys, "table", "--table", str(path))
    assert code == EXIT_FAILED
    assert report["items"][0]["mismatches"] == ["tri"]


def test_input_errors_exit_with_two(tmp_path, capsys):
    code, report = _run_json(capsys, "compute", "--invariant", "tri", "--pd", "X[1,2,3]")
    assert code == EXIT_INPUT
    assert report["ok"] is False

    bad = tmp_path / "bad.jsonl"
    bad.write_text("{broken\n", encoding="utf-8")
    code, _ = _run_json(capsys, "table", "--table", str(bad))
    assert code == EXIT_INPUT


@pytest.mark.parametrize("argv", [
    [],
    ["compute", "--invariant", "tri"],
    ["compute", "--invariant", "tri", "--pd", TREFOIL_PD, "--knot", "3_1"],
    ["compute", "--invariant", "homfly", "--knot", "3_1"],
    ["compute", "--invariant", "tri", "--knot", "9_42"],
    ["verify", "moves", "--knot", "3_1", "--moves", "r5"],
    ["verify", "everything"],
])
def test_usage_errors_exit_with_64(argv, capsys):
    assert main(argv) == EXIT_USAGE


def test_text_output_and_file(tmp_path, capsys):
    target = tmp_path / "reports" / "tri.json"
    code = main(["compute", "--invariant", "tri", "--knot", "3_1", "--format", "json", "--output", str(target)])
    assert code == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["tri"] == 9

    main(["compute", "--invariant", "tri", "--knot", "3_1"])
    text = capsys.readouterr().out
    assert "tri: 9" in text
    assert "ok: yes" in text


def test_runner_requires_exactly_one_source():
    runner = InvariantRunner()
    with pytest.raises(UsageError):
        runner.load_diagram()
    with pytest.raises(UsageError):
        InvariantRunner("lifted").scheme


def test_runner_compute_kauffman():
    runner = InvariantRunner()
    report = runner.compute(runner.load_diagram(knot="3_1"), "kauffman")
    assert report["normalized"] != report["bracket"]
    assert report["components"] == 1


def test_report_writer_render_and_filenames(tmp_path):
    writer = ReportWriter()
    report = {"suite": "demo", "items": [{"name": "a", "ok": True}], "empty": []}
    assert json.loads(writer.render(report, "json")) == report
    text = writer.render(report, "text")
    assert "- name: a" in text
    assert "empty: []" in text
    with pytest.raises(ValueError):
        writer.render(report, "yaml")
    assert writer.report_filename({"diagram": "3_1", "invariant": "jones"}, "json") == "3_1-jones.json"
    assert writer.report_filename({"diagram": "a:b?/c", "invariant": "tri"}, "text") == "a_b_c-tri.txt"
    assert writer.report_filename({}, "text") == "report.txt"

    path = writer.write("x", str(tmp_path), {"suite": "axioms", "scheme": "nor"}, "json")
    assert path == str(tmp_path / "axioms-nor.json")
    nested = writer.write("y", str(tmp_path / "deep" / "out.txt"))
    assert (tmp_path / "deep" / "out.txt").read_text(encoding="utf-8") == "y"
    assert nested.endswith("out.txt")


def test_output_directory_names_report(tmp_path, capsys):
    code = main(["compute", "--invariant", "tri", "--knot", "7_4", "--format", "json", "--output", str(tmp_path)])
    assert code == EXIT_OK
    assert json.loads((tmp_path / "7_4-tri.json").read_text(encoding="utf-8"))["tri"] == 9
