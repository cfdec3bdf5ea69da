import json

import pytest

from beckparts import cli
from beckparts.partitions import parse_partition
from beckparts.verification import VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- map ----------------------------------------------------------------------


def test_map_theta1_worked_example(capsys):
    code, out, _ = run(capsys, "map", "--fn", "theta1", "3+2^3+1^2")
    assert code == 0
    assert out == "3^3+2\n"


def test_map_theta2_witness_output(capsys):
    code, out, _ = run(capsys, "map", "--fn", "theta2", "5+3^2+2")
    assert code == 0
    assert out == "(6+5+2, 2)\n"


def test_map_theta2_inv_accepts_witness_text(capsys):
    code, out, _ = run(capsys, "map", "--fn", "theta2-inv", "(6+5+2, 2)")
    assert code == 0
    assert out == "5+3^2+2\n"


def test_map_every_function_is_wired(capsys):
    cases = {
        "glaisher-to-odd": ("5+2+1", "5+1^3"),
        "glaisher-to-distinct": ("5+1^3", "5+2+1"),
        "theta1": ("5+3^2+2", "6+5+1^2"),
        "theta1-inv": ("6+5+1^2", "5+3^2+2"),
        "theta2": ("5+2^3+1^3", "5+2^4+1"),
        "theta2-inv": ("5+2^4+1", "5+2^3+1^3"),
        "theta1-even": ("2^2+1^2", "2^3"),
        "theta1-even-inv": ("2^3", "2^2+1^2"),
    }
    assert set(cases) == set(cli.MAP_FUNCTIONS)
    for fn, (arg, want) in cases.items():
        code, out, _ = run(capsys, "map", "--fn", fn, arg)
        assert code == 0
        assert out == want + "\n"


def test_map_json_format(capsys):
    code, out, _ = run(capsys, "map", "--fn", "theta2", "--format", "json", "5+3^2+2")
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "witness"
    assert obj["even_part"] == 2
    code, out, _ = run(capsys, "map", "--fn", "theta1", "--format", "json", "2")
    assert json.loads(out) == {"kind": "partition", "n": 2, "parts": [[1, 2]]}


def test_map_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "map", "--fn", "theta1", "2+5")
    assert code == 2
    assert "error:" in err and "'5'" in err


def test_map_domain_error_exits_2(capsys):
    code, _, err = run(capsys, "map", "--fn", "theta1", "7+5")
    assert code == 2
    assert "error:" in err


# -- count / table --------------------------------------------------------------


def test_count_emits_csv(capsys):
    code, out, _ = run(capsys, "count", "--n", "6")
    assert code == 0
    assert out == "n,N,a,bo,be,b,co,ce,c,bo_prime,be_prime\n6,4,4,5,1,4,5,1,4,5,1\n"


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--n", "7", "--format", "json")
    row = json.loads(out)
    assert row == {
        "n": 7,
        "N": 5,
        "a": 5,
        "bo": 2,
        "be": 7,
        "b": -5,
        "co": 7,
        "ce": 2,
        "c": 5,
        "bo_prime": 7,
        "be_prime": 2,
    }


def test_count_rejects_negative_n(capsys):
    code, _, err = run(capsys, "count", "--n", "-2")
    assert code == 2
    assert "error:" in err


GOLDEN_TABLE_7 = """n,N,a,bo,be,b,co,ce,c,bo_prime,be_prime
0,1,0,0,0,0,0,0,0,0,0
1,1,0,0,0,0,0,0,0,0,0
2,1,1,1,0,1,1,0,1,1,0
3,2,1,0,1,-1,1,0,1,1,0
4,2,1,2,1,1,2,1,1,2,1
5,3,2,1,3,-2,3,1,2,3,1
6,4,4,5,1,4,5,1,4,5,1
7,5,5,2,7,-5,7,2,5,7,2
"""


def test_table_golden(capsys):
    code, out, _ = run(capsys, "table", "--n-max", "7")
    assert code == 0
    assert out == GOLDEN_TABLE_7


def test_table_byte_deterministic(capsys):
    _, first, _ = run(capsys, "table", "--n-max", "12")
    _, second, _ = run(capsys, "table", "--n-max", "12")
    assert first == second


# -- enumerate --------------------------------------------------------------------


def test_enumerate_class_bo(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--class", "bo")
    assert code == 0
    assert out.splitlines() == ["6", "4+1^2", "3+2+1", "2^3", "2+1^4"]


def test_enumerate_distinct_avoid(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--class", "distinct", "--avoid", "2")
    assert out.splitlines() == ["6", "5+1"]


def test_enumerate_avoid_requires_distinct(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "6", "--avoid", "2")
    assert code == 2
    assert "distinct" in err


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--format", "json")
    objs = json.loads(out)
    assert objs[0] == {"n": 4, "parts": [[4, 1]]}
    assert len(objs) == 5


def test_enumerate_output_reparses(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "9", "--class", "co")
    for line in out.splitlines():
        assert parse_partition(line).to_text() == line


# -- verify ------------------------------------------------------------------------


def test_verify_trivial_range_exits_0(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "1")
    assert code == 0
    reports = json.loads(out)
    assert all(r["status"] == "pass" for r in reports)
    assert {r["check"] for r in reports} >= {
        "even_parts_identity",
        "pipeline_agreement",
        "bijection[theta2]",
    }


def test_verify_text_format(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "2", "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines)


def test_verify_failure_exit_code(capsys, monkeypatch):
    failing = VerificationReport(
        check_name="even_parts_identity",
        n_range=(1, 5),
        status="fail",
        counterexample={"n": 3},
        elapsed=0.0,
    )
    monkeypatch.setattr(cli, "run_all", lambda *a, **k: [failing])
    code, out, _ = run(capsys, "verify", "--n-max", "5")
    assert code == 1
    assert json.loads(out)[0]["counterexample"] == {"n": 3}


def test_verify_budget_flags(capsys):
    code, out, _ = run(
        capsys, "verify", "--budget-enum", "6", "--budget-formula", "10"
    )
    assert code == 0
    reports = {r["check"]: r for r in json.loads(out)}
    assert reports["even_parts_identity"]["n_range"] == [1, 10]
    assert reports["bijection[theta1]"]["n_range"] == [0, 6]


# -- usage errors --------------------------------------------------------------------


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_missing_required_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["count"])
    assert exc.value.code == 2
