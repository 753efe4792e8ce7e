import pytest

from heckediv import verify as V


@pytest.mark.parametrize("suite", V.SUITES)
def test_suite_passes(suite):
    reports = V.run_suite(suite)
    assert reports, suite
    failing = [r for r in reports if not r.passed]
    assert not failing, [(r.name, r.lhs, r.rhs, r.detail) for r in failing]


def test_unknown_suite():
    with pytest.raises(ValueError):
        V.run_suite("nope")


def test_reports_serialize():
    for r in V.run_suite("algebra"):
        data = r.to_json()
        assert set(data) >= {"name", "lhs", "rhs", "exact", "tolerance", "passed"}
