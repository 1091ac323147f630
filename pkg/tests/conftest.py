import json
import pathlib

import pytest

GOLDEN = json.loads(pathlib.Path(__file__).with_name("golden.json").read_text())


@pytest.fixture(scope="session")
def golden():
    return GOLDEN


@pytest.fixture(scope="session")
def sieve7():
    from apinterval.sievelab import sieve
    return sieve(10 ** 7)


ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record one pass/fail line for the acceptance summary."""
    def add(number, title, ok, detail):
        label = f"criterion {number}" if isinstance(number, int) else "supplementary"
        ACCEPTANCE_LINES.append((number, f"[{'PASS' if ok else 'FAIL'}] {label} {title}: {detail}"))
        return ok
    return add


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES, key=lambda x: x[0]):
        terminalreporter.write_line(line)
