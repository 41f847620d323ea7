import io
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from colgomory.cli import run_cli
from colgomory.driver import SolveReport, solve_plain
from colgomory.errors import DimensionError, ParseError, RankError
from colgomory.serialize import emit_report, parse_instance, render_instance

from conftest import EX3_A, EX3_B, EX3_C, boxed_instance


def doc(**kw):
    base = {"m": 2, "n": 5, "A": EX3_A, "b": EX3_B, "c": EX3_C}
    base.update(kw)
    return json.dumps(base)


def test_parse_worked_example(data_dir):
    inst = parse_instance((data_dir / "example3.inst").read_text())
    assert inst.rows == EX3_A and list(inst.b) == EX3_B and inst.c == EX3_C
    assert inst.name == "worked example"


@pytest.mark.parametrize("text, exc", [
    (doc(b=[26, 19, 1]), DimensionError),
    (doc(m=2, n=2, A=[[1, 2], [2, 4]], c=[0, 0]), RankError),
    (doc(c=[126, 141.5, -10, 5, 67]), ParseError),
    ('{"m": 2,\n "n": 5,\n "A": [[1, 2]', ParseError),
    (json.dumps({"m": 2, "n": 5}), ParseError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_instance(text)


def test_parse_error_locations():
    with pytest.raises(ParseError) as e:
        parse_instance(doc(c=[126, 141.5, -10, 5, 67]))
    assert e.value.field == "c[2]"
    with pytest.raises(ParseError) as e:
        parse_instance('{"m": 2,\n "n": 5,\n "A": [[1, 2]')
    assert e.value.line == 3


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_round_trip(seed):
    inst = boxed_instance(random.Random(seed))
    inst.name = "r%d" % seed
    again = parse_instance(render_instance(inst))
    assert again == inst and again.name == inst.name


def test_text_report(ex3):
    text = emit_report(solve_plain(ex3, source="all"))
    assert "objective trace: 463 1/2, 462, 460 4/5, 460" in text
    assert "4 y1 + 3 y2 <= 70" in text and "y = (25, -10)" in text


def _no_floats(obj):
    if isinstance(obj, float):
        return False
    if isinstance(obj, dict):
        return all(_no_floats(v) for v in obj.values())
    if isinstance(obj, list):
        return all(_no_floats(v) for v in obj)
    return True


def test_json_reports(ex3):
    d = json.loads(emit_report(solve_plain(ex3, source="all"), "json"))
    assert d["y_star"] == [25, -10] and d["z_star"] == 460
    assert d["objective_trace"][0] == {"num": 927, "den": 2}
    assert _no_floats(d)
    d = json.loads(emit_report(solve_plain(ex3, max_cuts=0), "json"))
    assert d["status"] == "LimitReached"
    assert d["limit"] == {"kind": "cuts", "pivots": d["pivot_count"], "cuts": 0}


def cli(*args):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(args), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_cli_plain_trace(data_dir):
    code, out, _ = cli("solve", str(data_dir / "example3.inst"), "--mode", "plain", "--source", "all", "--trace")
    assert code == 0
    for line in ["CUT [6] 4 y1 + 3 y2 <= 70", "CUT [7] 5 y1 + 3 y2 <= 96", "CUT [8] 3 y1 + 2 y2 <= 55",
                 "PIVOT enter=6 leave=2 z=462", "y = (25, -10)"]:
        assert line in out
    assert all(l.split()[0] in ("PIVOT", "CUT", "OPT") for l in out.splitlines()[:9])


def test_cli_infeasible(data_dir):
    code, _, _ = cli("solve", str(data_dir / "forced_half.inst"), "--mode", "lex")
    assert code == 2


def test_cli_json_oracle(data_dir):
    code, out, _ = cli("solve", str(data_dir / "example3.inst"), "--json", "--oracle-check")
    d = json.loads(out)
    assert code == 0 and d["z_star"] == 460 and d["oracle_agrees"] is True


def test_cli_limit(data_dir):
    code, out, _ = cli("solve", str(data_dir / "example3.inst"), "--mode", "plain", "--max-cuts", "0")
    assert code == 3 and "limit reached: cuts" in out


def test_cli_usage_and_data_errors(tmp_path, data_dir):
    assert cli("solve")[0] == 64
    assert cli("frobnicate", "x")[0] == 64
    assert cli("solve", str(data_dir / "example3.inst"), "--source", "all")[0] == 64
    assert cli("solve", str(tmp_path / "missing.inst"))[0] == 64
    bad = tmp_path / "bad.inst"
    bad.write_text(doc(b=[1]))
    code, _, err = cli("solve", str(bad))
    assert code == 65 and "b has length 1" in err
    unb = tmp_path / "unbounded.inst"
    unb.write_text(json.dumps({"m": 1, "n": 1, "A": [[2]], "b": [1], "c": [3]}))
    assert cli("solve", str(unb))[0] == 65
    assert cli("solve", str(unb), "--mode", "plain")[0] == 0


def test_cli_internal_error(monkeypatch, data_dir):
    from colgomory import driver
    from colgomory.errors import InvariantViolation

    def boom(*a, **k):
        raise InvariantViolation("forced")
    monkeypatch.setattr(driver, "solve_lex", boom)
    assert cli("solve", str(data_dir / "example3.inst"))[0] == 70
