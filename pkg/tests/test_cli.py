import json
from pathlib import Path

import pytest

from qstrat import new_structure
from qstrat.cli import main, read_input, structure_json_text

FIXTURES = Path(__file__).parent / "fixtures"


def fixture(name: str) -> str:
    return str(FIXTURES / name)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_read_write_round_trip(tmp_path, transactions):
    path = tmp_path / "s.json"
    path.write_text(structure_json_text(transactions))
    assert read_input(path).structure() == transactions


def test_read_rejects_unknown_keys(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"domain": ["a"], "prec": [], "extra": 1}))
    with pytest.raises(Exception, match="unknown keys"):
        read_input(path)


def test_read_rejects_bad_pairs(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"domain": ["a"], "prec": [["a"]]}))
    with pytest.raises(Exception, match="two-element"):
        read_input(path)


def test_check_qsa_transactions(capsys):
    code, out, _ = run(capsys, "check", "--class", "qsa", fixture("transactions.json"))
    assert code == 0
    assert out.startswith("PASS")


def test_check_qsc_transactions_reports_missing_prec(capsys):
    code, out, _ = run(capsys, "check", "--class", "qsc", fixture("transactions.json"))
    assert code == 1
    assert "FAIL" in out
    assert "d prec a" in out or "a" in out
    assert "adding d weak a breaks acyclicity, so a prec d is required but missing" in out


def test_check_qso_witness_quadruple(capsys):
    code, out, _ = run(capsys, "check", "--class", "qso", fixture("interval_only_order.json"))
    assert code == 1
    assert "(a, c, b, d)" in out


def test_check_qso_nested_order(capsys):
    code, out, _ = run(capsys, "check", "--class", "qso", fixture("nested_order.json"))
    assert code == 0


def test_check_order_classes(capsys):
    for cls, expected in [("po", 0), ("to", 1), ("so", 1), ("io", 0)]:
        code, out, _ = run(capsys, "check", "--class", cls, fixture("interval_only_order.json"))
        assert code == expected, (cls, out)


def test_check_qsm(capsys):
    code, _, _ = run(capsys, "check", "--class", "qsm", fixture("maximal.json"))
    assert code == 0
    code, _, _ = run(capsys, "check", "--class", "qsm", fixture("transactions.json"))
    assert code == 1


def test_check_missing_file(capsys):
    code, _, err = run(capsys, "check", "--class", "qsa", "no-such-file.json")
    assert code == 2
    assert "error" in err


def test_close_transactions_matches_fixture_bytes(capsys):
    code, out, err = run(capsys, "close", fixture("transactions.json"))
    assert code == 0
    assert out == (FIXTURES / "transactions_closure.json").read_text()
    assert "added prec: a->d" in err
    assert "iterations: 2" in err


def test_close_qsm_already_closed(capsys):
    code, out, err = run(capsys, "close", fixture("maximal.json"))
    assert code == 0
    assert out == (FIXTURES / "maximal.json").read_text()
    assert "already closed, 0 additions" in err


def test_close_forbidden_cycle_fails_with_witness(capsys):
    code, out, _ = run(capsys, "close", fixture("forbidden_cycle.json"))
    assert code == 1
    assert "FAIL" in out
    assert "{1, 2, 3, 4}" in out


def test_saturate_transactions(capsys):
    code, out, _ = run(capsys, "saturate", fixture("transactions.json"))
    assert code == 0
    assert out.startswith("8 saturation(s)")
    assert out.count("-- saturation") == 8
    assert "(b | a c) ; d" in out
    assert "intervals:" in out


def test_saturate_qsm_single(capsys):
    code, out, _ = run(capsys, "saturate", fixture("maximal.json"))
    assert code == 0
    assert out.startswith("1 saturation(s)")


def test_saturate_limit(capsys):
    code, out, _ = run(capsys, "saturate", "--limit", "2", fixture("transactions.json"))
    assert code == 0
    assert out.startswith("2 saturation(s) (truncated)")


def test_saturate_two_element_empty(capsys, tmp_path):
    path = tmp_path / "two.json"
    path.write_text(structure_json_text(new_structure(["a", "b"])))
    code, out, _ = run(capsys, "saturate", str(path))
    assert code == 0
    assert out.startswith("3 saturation(s)")


def test_decompose_nested_order(capsys):
    code, out, _ = run(capsys, "decompose", fixture("nested_order.json"))
    assert code == 0
    assert out.strip() == "(b | a c) ; d"


def test_decompose_non_qs(capsys):
    code, out, _ = run(capsys, "decompose", fixture("interval_only_order.json"))
    assert code == 1
    assert "witness" in out


def test_intervals_nested_order(capsys):
    code, out, _ = run(capsys, "intervals", fixture("nested_order.json"))
    assert code == 0
    assert out.splitlines() == [
        "a: [0, 0]",
        "b: [0, 1]",
        "c: [1, 1]",
        "d: [2, 2]",
    ]


def test_intervals_non_interval(capsys, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(
        json.dumps({"domain": ["1", "2", "3", "4"], "prec": [["1", "3"], ["2", "4"]]})
    )
    code, out, _ = run(capsys, "intervals", str(path))
    assert code == 1
    assert "not an interval order" in out


def test_render_json_round_trip(capsys):
    code, out, _ = run(capsys, "render", fixture("transactions.json"))
    assert code == 0
    assert out == (FIXTURES / "transactions.json").read_text()


def test_render_dot(capsys):
    code, out, _ = run(capsys, "render", "--format", "dot", fixture("transactions.json"))
    assert code == 0
    assert out.startswith("digraph")
    assert '"a" -> "c";' in out
    assert '"a" -> "b" [style=dashed];' in out


def test_render_tree(capsys):
    code, out, _ = run(capsys, "render", "--format", "tree", fixture("nested_order.json"))
    assert code == 0
    assert out.strip() == "(b | a c) ; d"


def test_gen_deterministic(capsys):
    code, first, _ = run(capsys, "gen", "--n", "4", "--seed", "7", "--density", "0.3")
    assert code == 0
    code, second, _ = run(capsys, "gen", "--n", "4", "--seed", "7", "--density", "0.3")
    assert code == 0
    assert first == second
    doc = json.loads(first)
    assert doc["domain"] == ["a", "b", "c", "d"]


def test_gen_output_is_acyclic(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--n", "5", "--seed", "3", "--density", "0.6")
    assert code == 0
    path = tmp_path / "gen.json"
    path.write_text(out)
    code, out, _ = run(capsys, "check", "--class", "qsa", str(path))
    assert code == 0


def test_gen_bad_density(capsys):
    code, _, err = run(capsys, "gen", "--n", "3", "--density", "1.5")
    assert code == 2
    assert "density" in err


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--max-n", "2")
    assert code == 0
    lines = [line for line in out.splitlines() if line.strip()]
    assert len(lines) == 4
    assert all(line.endswith("PASS") for line in lines)


def test_unknown_class_flag_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "--class", "bogus", fixture("transactions.json")])
    assert exc.value.code == 2
