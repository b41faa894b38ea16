import pytest
from hypothesis import strategies as st

from ctube.tube import Indec

ACCEPTANCE_LINES: list[str] = []


@st.composite
def indecs(draw, p=None, max_len=None, rigid=False):
    p = p if p is not None else draw(st.integers(2, 6))
    top = p - 1 if rigid else (max_len or 2 * p)
    return Indec(draw(st.integers(1, p)), draw(st.integers(1, top)), p)


@st.composite
def indec_pairs(draw, rigid=False):
    p = draw(st.integers(2, 6))
    return draw(indecs(p=p, rigid=rigid)), draw(indecs(p=p, rigid=rigid))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        status = "PASS" if passed else "FAIL"
        suffix = f" ({detail})" if detail else ""
        ACCEPTANCE_LINES.append(f"criterion {number:2d} {status}: {title}{suffix}")

    return record
