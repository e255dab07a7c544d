import pytest

from dicksonlab import make_field
from dicksonlab.suites import SUITES, SuiteOptions, run_suites

QUICK = SuiteOptions(n_eval=60, n_identity=12, lemma31_max=500, self_recip_m=10, f_values_m=40, period_max=60)


@pytest.mark.parametrize("pe", [(3, 1), (5, 1), (7, 1), (3, 2), (2, 3)])
def test_every_suite_passes_or_skips(pe):
    results = run_suites(make_field(*pe), None, QUICK)
    assert [r.name for r in results] == list(SUITES)
    bad = [r for r in results if not r.ok]
    assert not bad, bad
    if pe[0] != 2:
        assert all(r.status == "pass" for r in results)


def test_char2_skips_odd_only_suites():
    results = {r.name: r for r in run_suites(make_field(2, 3), None, QUICK)}
    assert results["vset"].status == "skip" and results["sums"].status == "skip"
    assert results["field"].status == "pass"


def test_unknown_suite_rejected():
    with pytest.raises(KeyError):
        run_suites(make_field(5), ["nope"], QUICK)
