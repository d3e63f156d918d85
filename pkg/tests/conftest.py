import pytest

from costrength_lab.functors import Universe, default_universe

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")
    config.addinivalue_line("markers", "slow: takes more than a few seconds")


@pytest.fixture
def small():
    return Universe.of_sizes((0, 1, 2))


@pytest.fixture
def default():
    return default_universe()


@pytest.fixture
def record(request):
    """Attach a detail string to the acceptance line of the running test."""
    details: list[str] = []
    request.node.acceptance_details = details
    return details.append


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    n, text = marker.args
    entry = _CRITERIA.setdefault(n, {"text": text, "passed": True, "details": []})
    entry["passed"] = entry["passed"] and rep.passed
    entry["details"].extend(getattr(item, "acceptance_details", []))
    print("\n" + _line(n))


def _line(n: int) -> str:
    entry = _CRITERIA[n]
    line = f"criterion {n:>2} [{'PASS' if entry['passed'] else 'FAIL'}] {entry['text']}"
    if entry["details"]:
        line += " :: " + "; ".join(entry["details"])
    return line


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(_line(n))
