import pytest

from outerplanar.oracle import census

ORACLE_MAX = 6


@pytest.fixture(scope="session")
def oracle_census():
    """Exhaustive brute-force census for every n <= 6 (computed once per session)."""
    return {n: census(n) for n in range(ORACLE_MAX + 1)}


_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture(scope="session")
def acceptance_log(request):
    """Criterion number -> (passed, detail); printed in the terminal summary."""
    return request.config.stash.setdefault(_ACCEPTANCE, {})


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(_ACCEPTANCE, {})
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(log):
        passed, detail = log[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
