import csv
import io
import json

import pytest

from dicksonlab.cli import main


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def rows(out):
    return list(csv.DictReader(io.StringIO(out)))


def test_field_info(capsys):
    code, out, _ = run(capsys, "field-info", "--p", "3", "--e", "2")
    doc = json.loads(out)
    assert code == 0 and doc["q"] == 9 and doc["V_size"] == 9
    code, out, _ = run(capsys, "field-info", "--p", "5")
    assert json.loads(out)["nu"] == [2]


def test_field_info_bad_prime(capsys):
    code, _, err = run(capsys, "field-info", "--p", "4", "--e", "1")
    assert code == 1 and "p must be prime" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as ei:
        main(["eval", "--p", "5"])
    assert ei.value.code == 1
    code, _, _ = run(capsys, "survey", "--p", "5", "--n-max", "-1")
    assert code == 1


def test_eval_all_routes(capsys):
    code, out, _ = run(capsys, "eval", "--p", "5", "--n", "9", "--x", "1", "--format", "csv")
    r = rows(out)
    assert code == 0
    assert {x["method"] for x in r} == {"direct", "recursive", "functional", "via_f", "genfun"}
    assert {x["value"] for x in r} == {"4"}


def test_eval_quarter_and_extension(capsys):
    code, out, _ = run(capsys, "eval", "--p", "5", "--n", "2", "--x", "1/4", "--format", "csv")
    assert {x["value"] for x in rows(out)} == {"2"}
    code, out, _ = run(capsys, "eval", "--p", "3", "--e", "2", "--n", "7", "--x", "1.2", "--format", "csv")
    assert code == 0 and len({x["value"] for x in rows(out)}) == 1


def test_eval_huge_n_uses_functional(capsys):
    code, out, _ = run(capsys, "eval", "--p", "7", "--n", str(2**40), "--x", "3", "--method", "functional")
    assert code == 0


def test_pp(capsys):
    code, out, _ = run(capsys, "pp", "--p", "5", "--n", "4", "--format", "csv")
    r = rows(out)
    assert code == 0 and {x["is_pp"] for x in r} == {"false"}
    assert [x["method"] for x in r] == ["exhaustive", "power_sum", "two_to_one"]


def test_survey_examples(capsys):
    code, out, _ = run(capsys, "survey", "--p", "3", "--n-max", "8", "--format", "csv")
    r = rows(out)
    assert code == 0 and len(r) == 9
    assert r[2]["is_pp"] == "true"
    assert all(x["agree_power_sum"] == "true" for x in r)
    code, out, _ = run(capsys, "survey", "--p", "5", "--n-max", "24", "--format", "csv")
    r = rows(out)
    assert r[6]["filter_overall"] == "false" and r[6]["thm31_passed"] == "false"


def test_survey_char2_blank_column(capsys):
    code, out, _ = run(capsys, "survey", "--p", "2", "--e", "2", "--format", "csv")
    r = rows(out)
    assert code == 0 and len(r) == 16
    assert {x["agree_two_to_one"] for x in r} == {""}


def test_survey_guard(capsys):
    code, _, err = run(capsys, "survey", "--p", "131")
    assert code == 1 and "--force" in err


def test_sums(capsys):
    code, out, _ = run(capsys, "sums", "--p", "3", "--format", "csv")
    r = rows(out)
    assert code == 0 and len(r) == 8
    assert all(x["match"] == "true" for x in r)
    assert r[3]["S_thm41"] == "2" and r[0]["S_brute"] == "0"
    code, _, err = run(capsys, "sums", "--p", "2", "--e", "3")
    assert code == 1 and "odd characteristic" in err


def test_filters(capsys):
    code, out, _ = run(capsys, "filters", "--p", "7", "--n-max", "10", "--format", "csv")
    r = rows(out)
    assert code == 0 and r[6]["n"] == "7" and r[6]["overall"] == "false"


def test_verify_subset(capsys):
    code, out, err = run(capsys, "verify", "--p", "5", "--suite", "thm22")
    doc = json.loads(out)
    assert code == 0 and [s["name"] for s in doc["suites"]] == ["thm22"]
    assert "thm22" in err


def test_verify_full_small(capsys):
    code, out, _ = run(capsys, "verify", "--p", "3", "--e", "2")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert {s["status"] for s in doc["suites"]} == {"pass"}


def test_out_file(tmp_path, capsys):
    path = tmp_path / "s.csv"
    code, out, _ = run(capsys, "sums", "--p", "5", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("n,S_thm41,S_brute,match\n")


def test_modulus_override(capsys):
    code, out, _ = run(capsys, "field-info", "--p", "3", "--e", "2", "--modulus", "2,2,1")
    assert code == 0 and json.loads(out)["modulus"] == [2, 2, 1]
    code, _, _ = run(capsys, "field-info", "--p", "3", "--e", "2", "--modulus", "2,0,1")
    assert code == 1
