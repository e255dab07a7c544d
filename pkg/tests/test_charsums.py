import json
from pathlib import Path

import pytest

from dicksonlab import CharacteristicError, GuardExceeded, InconsistencyError, make_field
from dicksonlab.charsums import (
    SumTable,
    b_expansion_oracle,
    compute_b,
    compute_c,
    solve_d,
    sum_table_bruteforce,
    sum_table_thm41,
    thm41_recurrence_check,
)
from dicksonlab.dickson import quarter_value_int
from dicksonlab.series import CoeffSeq

DATA = Path(__file__).parent / "data"
SMALL = [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)]


def test_b_q3():
    F = make_field(3)
    b = compute_b(F)
    assert [F.render(v) for v in b.values] == ["2", "0", "2", "0", "2", "0", "2"]  # -1, 0, -1, 0, 2, 0, -1


@pytest.mark.parametrize("pe", SMALL + [(5, 2), (3, 3)])
def test_b_closed_form_matches_expansion(pe):
    F = make_field(*pe)
    b = compute_b(F)
    assert b == b_expansion_oracle(F)
    assert b.coeff(0) == F.neg(1)
    assert b.coeff(F.q - 1) == F.neg(1)


@pytest.mark.parametrize("q", [3, 5])
def test_frozen_fixtures(q):
    doc = json.loads((DATA / f"sums_q{q}.json").read_text())
    F = make_field(doc["field"]["p"], doc["field"]["e"])
    c = compute_c(F)
    assert [F.render(v) for v in c.values] == doc["c"]
    assert [F.render(v) for v in sum_table_thm41(F).values] == doc["S"]


def test_c_shape():
    F = make_field(5)
    c = compute_c(F)
    assert len(c) == F.q**2 + F.q
    assert c.coeff(0) == 0


@pytest.mark.parametrize("pe", SMALL)
def test_table_matches_bruteforce(pe):
    F = make_field(*pe)
    thm = sum_table_thm41(F)
    brute = sum_table_bruteforce(F)
    assert thm.values == brute.values
    assert thm41_recurrence_check(thm, compute_c(F))


def test_solve_d_against_bruteforce_q3():
    F = make_field(3)
    D = solve_d(compute_c(F), 3)
    S = sum_table_bruteforce(F)
    assert D.coeff(1) == F.neg(compute_c(F).coeff(1))
    for n in range(1, 9):
        assert D.coeff(n) == F.sub(S.values[n - 1], quarter_value_int(F, n))


def test_solve_d_last_entry():
    F = make_field(7)
    c = compute_c(F)
    D = solve_d(c, 7)
    assert D.coeff(48) == c.coeff(7 * 7 + 7 - 1)


def test_solve_d_detects_inconsistent_rhs():
    F = make_field(5)
    c = compute_c(F)
    bumped = list(c.values)
    bumped[-1] = F.add(bumped[-1], 1)
    with pytest.raises(InconsistencyError):
        solve_d(CoeffSeq(F, tuple(bumped)), 5)


def test_recurrence_check_reports_family():
    F = make_field(5)
    table = sum_table_thm41(F)
    vals = list(table.values)
    vals[0] = F.add(vals[0], 1)
    res = thm41_recurrence_check(SumTable(F, tuple(vals), "tampered"), compute_c(F))
    assert not res and res.family == 1 and res.indices == (1,)


def test_small_values():
    F3, F5 = make_field(3), make_field(5)
    assert sum_table_thm41(F3).S(4) == 2
    assert sum_table_bruteforce(F5).S(4) == 0
    for pe in SMALL:
        t = sum_table_thm41(make_field(*pe))
        assert t.S(1) == 0 and t.S(2) == 0


def test_serialization():
    F = make_field(3)
    t = sum_table_thm41(F)
    lines = t.to_csv().splitlines()
    assert lines[0] == "n,S,method"
    assert lines[4] == "4,2,thm41"
    doc = json.loads(t.to_json())
    assert len(doc["rows"]) == 8


def test_guards():
    with pytest.raises(CharacteristicError):
        sum_table_thm41(make_field(2, 3))
    with pytest.raises(GuardExceeded):
        sum_table_thm41(make_field(67))


@pytest.mark.parametrize("p", [3, 5])
def test_sums_minus_quarter_term_periodic(p):
    F = make_field(p)
    period = F.q**2 - 1
    top = 2 * period
    from dicksonlab.dickson import e1_sequences

    table = e1_sequences(F, top)
    S = [0] * (top + 1)
    for x in range(F.q):
        for n in range(top + 1):
            S[n] = F.add(S[n], table[x][n])
    reduced = [F.sub(S[n], quarter_value_int(F, n)) for n in range(top + 1)]
    for n in range(1, period + 1):
        assert reduced[n] == reduced[n + period]
