"""Shared fixtures: the table regenerations are computed once per session."""

import pytest

from coiso import regenerate_polar_table, regenerate_tables


@pytest.fixture(scope="session")
def tables10():
    return regenerate_tables(10, tables=("1", "2", "negative"))


@pytest.fixture(scope="session")
def polar10():
    return regenerate_polar_table(10)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    """Record the outcome of one acceptance criterion for the terminal summary."""
    def record(number: int, ok: bool, detail: str) -> None:
        ACCEPTANCE[number] = (ok, detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
