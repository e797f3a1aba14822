import pytest

import goldens

# filled by test_acceptance; printed once at the end of the run
ACCEPTANCE = {}


@pytest.fixture(scope="session", params=goldens.EXAMPLES)
def example(request):
    return goldens.load(request.param)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, label = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {n}: {label}")
