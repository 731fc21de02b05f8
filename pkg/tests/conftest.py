import time

import pytest

from heckeseries.pipeline import run_theorem


class Runs:
    """Pipeline results per genus, computed on first use and shared by the
    whole session.  Wall time of each run is kept for the runtime limits."""

    def __init__(self, cache):
        self.cache = cache
        self.results = {}
        self.seconds = {}

    def __call__(self, n):
        if n not in self.results:
            t = time.perf_counter()
            self.results[n] = run_theorem(n, cache=self.cache)
            self.seconds[n] = time.perf_counter() - t
        return self.results[n]


@pytest.fixture(scope="session")
def runs(tmp_path_factory):
    return Runs(str(tmp_path_factory.mktemp("omega-cache")))


# ---------------------------------------------------------------------------
# acceptance summary: one line per criterion at the end of the run

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.setdefault(report.nodeid, []).append(report.outcome)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criteria_titles[item.nodeid] = m.args


_criteria_titles = {}


def pytest_terminal_summary(terminalreporter):
    if not _criteria_titles:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for nodeid, (num, title) in sorted(_criteria_titles.items(), key=lambda kv: kv[1][0]):
        outcomes = _criteria.get(nodeid)
        if outcomes is None:
            status = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            status = "PASS"
        elif any(o == "skipped" for o in outcomes):
            status = "SKIP"
        else:
            status = "FAIL"
        tr.write_line("criterion %2d  %-4s  %s" % (num, status, title))
