import sys

import pytest


@pytest.fixture(scope="session")
def code_4_1():
    import codebounds as cb
    return cb.build_code(4, 1)


@pytest.fixture(scope="session")
def code_6_2():
    import codebounds as cb
    return cb.build_code(6, 2)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Re-emit the acceptance pass/fail lines where capture can't hide them."""
    mod = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
