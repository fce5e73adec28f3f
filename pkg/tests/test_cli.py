import csv
import io
import json

from lensframe.cli import main, run_verification
from lensframe.framing import LensSpace, framing_invariant


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariant_plain(capsys):
    code, out, _ = run_cli(capsys, "invariant", "5", "2")
    assert code == 0
    assert out.strip() == "3 (mod 5)"


def test_invariant_normalized(capsys):
    code, out, _ = run_cli(capsys, "invariant", "5", "2", "--normalized")
    assert code == 0
    assert out.strip() == "0 (mod 5)"


def test_invariant_json_schema(capsys):
    code, out, _ = run_cli(capsys, "invariant", "5", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"p": 5, "q": 2, "q_inv": 3, "value": 3, "normalized": False}


def test_invariant_reduces_q(capsys):
    code, out, _ = run_cli(capsys, "invariant", "5", "-1")
    assert code == 0
    assert out.strip() == "1 (mod 5)"


def test_invariant_even_p_fails(capsys):
    code, _, err = run_cli(capsys, "invariant", "6", "1")
    assert code == 1
    assert "error" in err


def test_invariant_non_coprime_fails(capsys):
    code, _, err = run_cli(capsys, "invariant", "9", "3")
    assert code == 1
    assert "coprime" in err


def test_table_csv_rows(capsys):
    code, out, _ = run_cli(capsys, "table", "5", "5", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,q,q_inv,odd_rep_q,odd_rep_qinv,F,F_norm"
    assert len(lines) == 5  # header + four units
    assert lines[2] == "5,2,3,7,3,3,0"


def test_table_p3_rows(capsys):
    code, out, _ = run_cli(capsys, "table", "3", "3", "--format", "csv")
    # odd representatives of 2 and of 2^-1 = 2 mod 3 are both 5
    assert out.strip().splitlines()[1:] == ["3,1,1,1,1,0,1", "3,2,2,5,5,1,2"]


def test_table_without_odd_p_is_empty(capsys):
    code, out, _ = run_cli(capsys, "table", "4", "4", "--format", "csv")
    assert code == 0
    assert out.strip() == "p,q,q_inv,odd_rep_q,odd_rep_qinv,F,F_norm"


def test_table_sorted_and_json_matches_csv(capsys):
    code, csv_out, _ = run_cli(capsys, "table", "3", "15", "--format", "csv")
    code2, json_out, _ = run_cli(capsys, "table", "3", "15", "--format", "json")
    assert code == code2 == 0
    rows = json.loads(json_out)
    assert [(r["p"], r["q"]) for r in rows] == sorted((r["p"], r["q"]) for r in rows)
    csv_rows = list(csv.reader(io.StringIO(csv_out)))[1:]
    assert len(csv_rows) == len(rows)
    for parsed, row in zip(csv_rows, rows):
        assert [int(x) for x in parsed] == [row[k] for k in row]


def test_table_bad_range(capsys):
    code, _, err = run_cli(capsys, "table", "9", "5")
    assert code == 1


def test_verify_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "5")
    assert code == 0
    assert "0 failure" in out
    assert out.strip().endswith("PASS")


def test_verify_json_report(capsys):
    code, out, _ = run_cli(capsys, "verify", "199", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["checks_run"] > 0
    assert payload["failures"] == []
    assert payload["elapsed_ms"] >= 0
    # order 9 collides; reported without failing the run
    assert payload["composite_collisions"]["9"] == [[1, 4], [1, 7], [2, 8], [5, 8]]


def test_verify_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "2")
    assert code == 1


def test_verification_report_counts():
    report, collisions = run_verification(5)
    assert report.checks_run > 0
    assert report.failures == []
    assert collisions == {}


def test_search_plain(capsys):
    code, out, _ = run_cli(capsys, "search", "7")
    assert code == 0
    assert "L(7,1) ~h L(7,2) (not homeo)" in out


def test_search_two_summands(capsys):
    code, out, _ = run_cli(capsys, "search", "5", "2")
    assert code == 0
    assert "L(5,1)#L(5,1) ~h L(5,1)#L(5,4) (not homeo)" in out


def test_search_empty(capsys):
    code, out, _ = run_cli(capsys, "search", "3")
    assert code == 0
    assert out == ""


def test_search_json_lists_summands(capsys):
    code, out, _ = run_cli(capsys, "search", "5", "2", "--format", "json")
    assert code == 0
    pairs = json.loads(out)
    assert {"first": [[5, 1], [5, 1]], "second": [[5, 1], [5, 4]]} in pairs


def test_obstruct_order_120(capsys):
    code, out, _ = run_cli(capsys, "obstruct", "120", "1")
    assert code == 0
    assert out.strip() == "obstructed (mod 120)"


def test_obstruct_left_invariant_class(capsys):
    code, out, _ = run_cli(capsys, "obstruct", "120", "0")
    assert code == 0
    assert out.startswith("unobstructed")


def test_obstruct_inconsistent_input(capsys):
    code, _, err = run_cli(capsys, "obstruct", "7", "1", "--h1-nontrivial")
    assert code == 1
    assert "inconsistent" in err


def test_obstruct_halved_modulus(capsys):
    code, out, _ = run_cli(capsys, "obstruct", "8", "1", "--h1-nontrivial")
    assert code == 0
    assert out.strip() == "obstructed (mod 4)"


def test_obstruct_json(capsys):
    code, out, _ = run_cli(capsys, "obstruct", "120", "1", "--format", "json")
    assert json.loads(out) == {
        "group_order": 120,
        "h1_z2_trivial": True,
        "pullback_class": 1,
        "modulus": 120,
        "obstructed": True,
    }


def test_out_file(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code = main(["table", "3", "9", "--format", "csv", "--out", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    text = target.read_text()
    assert text.startswith("p,q,")
    assert text.endswith("\n")


def test_out_unwritable(tmp_path, capsys):
    code = main(["table", "3", "9", "--out", str(tmp_path / "missing" / "x.csv")])
    assert code == 1


def test_usage_errors_exit_1(capsys):
    assert main([]) == 1
    assert main(["frobnicate"]) == 1
    assert main(["invariant", "5", "2", "--format", "yaml"]) == 1
    assert main(["search", "7", "3"]) == 1


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0


def test_csv_round_trip(capsys):
    code, out, _ = run_cli(capsys, "table", "3", "49", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    rebuilt = [",".join(rows[0])]
    for row in rows[1:]:
        p, q = int(row[0]), int(row[1])
        row[5] = str(framing_invariant(LensSpace(p, q)).value)
        rebuilt.append(",".join(row))
    assert "\n".join(rebuilt) == out.strip()
