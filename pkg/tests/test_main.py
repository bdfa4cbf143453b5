"""Tests for the command-line interface."""

import csv
import io
import json

import pytest

from asymmetric_blotto.equilibria.closed_form import fixed_strategies, w3_equilibrium
from asymmetric_blotto.main import EXIT_ERROR, EXIT_OK, main
from asymmetric_blotto.schemas import dump_strategy


def _run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_value_w2(capsys):
    code, out, _ = _run(capsys, "value-w2", "--t", "3/4")
    assert code == EXIT_OK
    assert json.loads(out) == {"t": "3/4", "value": "3/4"}


def test_value_w2_csv(capsys):
    code, out, _ = _run(capsys, "value-w2", "--t", "9/10", "--format", "csv")
    assert code == EXIT_OK
    assert out == "t,value\n9/10,3/5\n"


def test_value_w3_unknown(capsys):
    code, out, _ = _run(capsys, "value-w3", "--t", "19/32")
    assert code == EXIT_OK
    assert json.loads(out) == {"t": "19/32", "kind": "Unknown", "value": None}


def test_payoff_of_pure_allocations(capsys):
    code, out, _ = _run(capsys, "payoff", "--a", "1/5,4/5", "--b", "1/5,2/5")
    assert code == EXIT_OK
    assert json.loads(out) == {"payoff_a": "3/4", "payoff_b": "1/4"}


def test_payoff_of_strategy_files(capsys, tmp_path):
    construction = w3_equilibrium("5/8")
    pa, pb = tmp_path / "pa.json", tmp_path / "pb.json"
    pa.write_text(dump_strategy(construction.pa), encoding="utf-8")
    pb.write_text(dump_strategy(construction.pb), encoding="utf-8")
    code, out, _ = _run(capsys, "payoff", "--pa", str(pa), "--pb", str(pb))
    assert code == EXIT_OK
    assert json.loads(out)["payoff_a"] == "5/6"


def test_best_response(capsys, tmp_path):
    path = tmp_path / "b.json"
    path.write_text(dump_strategy(fixed_strategies("5.4-B")), encoding="utf-8")
    code, out, _ = _run(capsys, "best-response", "--against", str(path), "--budget", "1")
    assert code == EXIT_OK
    result = json.loads(out)
    assert result["sup_payoff"] == "4/5"
    assert result["attained"] is True


def test_equilibrium(capsys):
    code, out, _ = _run(capsys, "equilibrium", "--t", "3/4", "--n", "2")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["known"] is True
    assert document["k"] == 1
    assert document["epsilon"] == "3/16"


def test_equilibrium_unknown_range(capsys):
    code, out, _ = _run(capsys, "equilibrium", "--t", "19/32", "--n", "3")
    assert code == EXIT_OK
    assert json.loads(out) == {"t": "19/32", "n": 3, "known": False}


def test_check_family(capsys, tmp_path):
    path = tmp_path / "pa.json"
    path.write_text(dump_strategy(w3_equilibrium("5/8").pa), encoding="utf-8")
    code, out, _ = _run(capsys, "check-family", "--strategy", str(path), "--t", "5/8")
    assert code == EXIT_OK
    assert json.loads(out)["member"] is True


def test_verify_passes(capsys):
    code, out, _ = _run(capsys, "verify", "5.4", "5.5")
    assert code == EXIT_OK
    reports = json.loads(out)
    assert [r["theorem"] for r in reports] == ["5.4", "5.5"]
    assert all(r["pass"] for r in reports)
    assert all("runtime_seconds" not in r for r in reports)


def test_verify_timings(capsys):
    code, out, _ = _run(capsys, "verify", "5.5", "--timings")
    assert code == EXIT_OK
    assert "runtime_seconds" in json.loads(out)[0]


def test_solve_discrete(capsys, tmp_path):
    matrix = tmp_path / "matrix.csv"
    argv = ("solve-discrete", "--tb", "1", "--n", "3", "--grid", "6", "--matrix-csv", str(matrix))
    code, out, _ = _run(capsys, *argv)
    assert code == EXIT_OK
    assert json.loads(out)["value"] == "1/2"
    assert matrix.read_text(encoding="utf-8").startswith("row,")


def test_solve_discrete_bad_grid(capsys):
    code, _, err = _run(capsys, "solve-discrete", "--tb", "2/3", "--n", "3", "--grid", "4")
    assert code == EXIT_ERROR
    assert "multiple of 3" in err


def test_sample_marginals_is_reproducible(capsys):
    argv = ("sample-marginals", "--depth", "1", "--samples", "200", "--seed", "5")
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)
    assert first == second
    assert first.splitlines()[0] == "x1,x2,x3"
    assert len(first.splitlines()) == 201


def test_sample_marginals_summary(capsys):
    code, out, _ = _run(
        capsys, "sample-marginals", "--samples", "500", "--seed", "1", "--format", "json"
    )
    assert code == EXIT_OK
    summary = json.loads(out)
    assert [m["expected_mean"] for m in summary["marginals"]] == ["1/6", "1/3", "1/2"]


def test_plot_data(capsys, tmp_path):
    out = tmp_path / "marginals.csv"
    argv = ("plot-data", "--curve", "marginals", "--points", "12", "--out", str(out))
    code, _, _ = _run(capsys, *argv)
    assert code == EXIT_OK
    assert len(out.read_text(encoding="utf-8").splitlines()) == 14


def test_plot_data_needs_out(capsys):
    code, _, err = _run(capsys, "plot-data", "--curve", "w2")
    assert code == EXIT_ERROR
    assert "--out" in err


def test_infeasible_allocation(capsys):
    code, _, err = _run(capsys, "payoff", "--a", "1/2,1/4", "--b", "1/5,2/5")
    assert code == EXIT_ERROR
    assert "Infeasible" in err


def test_out_of_range_t(capsys):
    code, _, _ = _run(capsys, "value-w2", "--t", "3/2")
    assert code == EXIT_ERROR


def test_decimal_input_is_a_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main(["value-w2", "--t", "0.75"])
    assert excinfo.value.code == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / "value.json"
    code, out, _ = _run(capsys, "value-w2", "--t", "1", "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["value"] == "1/2"


def test_best_response_csv(capsys, tmp_path):
    path = tmp_path / "b.json"
    path.write_text(dump_strategy(fixed_strategies("5.4-B")), encoding="utf-8")
    argv = ("best-response", "--against", str(path), "--budget", "1", "--format", "csv")
    code, out, _ = _run(capsys, *argv)
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    assert rows[0]["sup_payoff"] == "4/5"
    assert rows[0]["attained"] == "true"
    assert len(rows[0]["witness"].split()) == 3


def test_equilibrium_csv(capsys):
    code, out, _ = _run(capsys, "equilibrium", "--t", "3/4", "--n", "2", "--format", "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "t,n,value,player,prob,alloc"
    assert "3/4,2,3/4,A,1/2,3/16 13/16" in lines
    assert "3/4,2,3/4,B,1/2,0 3/4" in lines
    assert len(lines) == 5


def test_check_family_csv(capsys, tmp_path):
    path = tmp_path / "pa.json"
    path.write_text(dump_strategy(w3_equilibrium("5/8").pa), encoding="utf-8")
    argv = ("check-family", "--strategy", str(path), "--t", "5/8", "--format", "csv")
    code, out, _ = _run(capsys, *argv)
    assert code == EXIT_OK
    assert out == "t,member\n5/8,true\n"


def test_verify_csv(capsys):
    code, out, _ = _run(capsys, "verify", "5.4", "5.5", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {row["theorem"] for row in rows} == {"5.4", "5.5"}
    assert all(row["pass"] == "true" for row in rows)


def test_unwritable_out_names_the_path(capsys, tmp_path):
    target = tmp_path / "missing" / "value.json"
    code, _, err = _run(capsys, "value-w2", "--t", "1", "--out", str(target))
    assert code == EXIT_ERROR
    assert str(target) in err
