import pytest

from lcif2 import load_dataset

# acceptance outcomes, filled in by test_acceptance and echoed at the end
ACCEPTANCE: list[tuple[int, str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(ACCEPTANCE):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:2d} {name}: {detail}")


@pytest.fixture(scope="session")
def karate():
    return load_dataset("karate")


@pytest.fixture(scope="session")
def dolphins():
    return load_dataset("dolphins")


@pytest.fixture(scope="session")
def football():
    return load_dataset("football")
