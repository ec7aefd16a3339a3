import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=200, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=50, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    num = getattr(report, "criterion", None)
    if num is None:
        return
    if report.failed:
        verdict = "FAIL"
    elif report.skipped:
        verdict = "SKIP"
    elif report.when == "call":
        verdict = "PASS"
    else:
        return
    # several tests may share a criterion; any failure sticks
    if _ACCEPTANCE.get(num, ("", ""))[1] != "FAIL":
        _ACCEPTANCE[num] = (report.criterion_title, verdict)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark:
        rep.criterion, rep.criterion_title = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        title, verdict = _ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {verdict}  {title}")
