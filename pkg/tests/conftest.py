import hypothesis
import pytest

from zerobls.params import TINY, load_params

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def cp():
    return load_params()


@pytest.fixture(scope="session")
def tiny():
    return TINY


def brute_points(p):
    """All affine solutions of y^2 = x^3 + x mod p, by enumerating (x, y)."""
    return [(x, y) for x in range(p) for y in range(p) if (y * y - x ** 3 - x) % p == 0]


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    ACCEPTANCE_RESULTS.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in ACCEPTANCE_RESULTS:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
