import pytest

from wfcomb.suites import DEFAULT_BOUNDS, SUITES, SuiteReport, UnknownSuite, run_suite


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


@pytest.mark.parametrize("name", sorted(SUITES))
def test_small_bounds_pass(name):
    rep = run_suite(name, min(DEFAULT_BOUNDS[name], 4))
    assert rep.passed and rep.instances > 0


def test_all_at_zero():
    rep = run_suite("all", 0)
    assert rep.passed and rep.to_json()["suite"] == "all"


def test_report_records_crashes():
    rep = SuiteReport("x", 0)
    rep.run(1, "law", lambda: 1 // 0)
    rep.run(2, "law", lambda: True)
    rep.run(3, "law", lambda: [1, 2])
    assert rep.instances == 3 and len(rep.failures) == 2
    assert "ZeroDivisionError" in rep.failures[0]["got"]
    assert rep.failures[1]["got"] == [1, 2]
