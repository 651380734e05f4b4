import pytest

from cwcodes.codebook import bch_code, puncture, reed_muller_1, shorten
from cwcodes.propagate import sweep_modes

ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool | None, text: str) -> None:
    """``ok=None`` marks a criterion that could not run."""
    status = "SKIP" if ok is None else "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {criterion:>2}: {status}  {text}")


@pytest.fixture(scope="session")
def bch():
    return bch_code(5, 11)


@pytest.fixture(scope="session")
def rm_punctured():
    return puncture(reed_muller_1(5), 1)


@pytest.fixture(scope="session")
def bch_reports(bch):
    return sweep_modes(bch, range(9, 15))


@pytest.fixture(scope="session")
def shortened_bch(bch):
    return {i: shorten(bch, i) for i in (1, 2)}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
