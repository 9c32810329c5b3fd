import pytest

from alexq import CayleyMatrix, QuandleMatrix

import oracles

CRITERIA: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        ok, detail = CRITERIA[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def record_criterion():
    def record(num: int, ok: bool, detail: str) -> None:
        CRITERIA[num] = (ok, detail)
        print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")

    return record


@pytest.fixture
def klein_quandle():
    return QuandleMatrix(oracles.KLEIN_QUANDLE)


@pytest.fixture
def klein():
    return CayleyMatrix(oracles.KLEIN)


@pytest.fixture
def non_alexander():
    return QuandleMatrix(oracles.NON_ALEXANDER)
