import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=120,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_criteria = pytest.StashKey[list]()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, summary = mark.args
    verdict = "PASS" if report.passed else "FAIL"
    item.config.stash.setdefault(_criteria, []).append(
        (number, f"{verdict} criterion {number}: {summary} ({report.duration:.1f}s)"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = config.stash.get(_criteria, [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(rows):
        terminalreporter.write_line(line)
