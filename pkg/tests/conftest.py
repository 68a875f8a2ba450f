import math

import pytest

from gkrecog.search import SearchBounds, enumerate_groups


def trial_division(n: int) -> dict[int, int]:
    """Reference factorization, independent of gkrecog.arith."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def naive_is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


@pytest.fixture(scope="session")
def default_pool():
    return enumerate_groups(SearchBounds())


_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    n, title = marker.args
    prev = _ACCEPTANCE.get(n, ("PASS", title))[0]
    status = "FAIL" if report.failed or prev == "FAIL" else "PASS"
    _ACCEPTANCE[n] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        status, title = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d} {status}  {title}")
