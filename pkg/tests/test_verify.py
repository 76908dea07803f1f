import pytest

from cslab import verify


@pytest.mark.parametrize("suite", verify.SUITES)
def test_each_suite_passes_small(suite):
    results = verify.run_suite(suite, 5)
    assert results
    assert all(r.ok for r in results), [r for r in results if not r.ok]


def test_parallel_results_keep_case_order():
    serial = verify.run_suite("all", 5, workers=1)
    parallel = verify.run_suite("all", 5, workers=3)
    assert [(r.name, r.ok, r.detail, r.echo) for r in serial] == [
        (r.name, r.ok, r.detail, r.echo) for r in parallel
    ]


def test_thread_cap_from_environment(monkeypatch):
    monkeypatch.setenv("CS_LAB_THREADS", "2")
    names = [r.name for r in verify.run_suite("raney", 4)]
    assert names == [c.name for c in verify.build_cases("raney", 4)]


def test_crash_becomes_failed_case():
    case = verify.Case("boom", lambda: 1 / 0)
    res = verify._run(case)
    assert not res.ok and "ZeroDivisionError" in res.detail


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.build_cases("nope", 3)
