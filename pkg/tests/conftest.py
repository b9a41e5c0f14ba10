import re

import pytest

from starbrace import get_entry, list_entries
from starbrace.search import labeled_star_semigroups, star_semigroups

_CRITERIA = {}
_PATTERN = re.compile(r"test_criterion_(\d+)_")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or report.outcome != "passed":
        prev = _CRITERIA.get(n, True)
        _CRITERIA[n] = prev and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if _CRITERIA[n] else 'FAIL'}")


@pytest.fixture(scope="session")
def classes_upto_3():
    return [S for n in (1, 2, 3) for S in star_semigroups(n)]


@pytest.fixture(scope="session")
def classes_upto_4():
    return [S for n in (1, 2, 3, 4) for S in star_semigroups(n)]


@pytest.fixture(scope="session")
def labeled_upto_3():
    return [S for n in (1, 2, 3) for S in labeled_star_semigroups(n)]


@pytest.fixture(scope="session")
def catalog_semigroups():
    return [get_entry(name).semigroup for name, _ in list_entries()]
