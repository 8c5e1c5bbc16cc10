from pathlib import Path

import pytest

from monotri import MultiPoly

FIXTURES = Path(__file__).parent / "fixtures"


def golden(name: str, arity: int) -> MultiPoly:
    return MultiPoly.parse((FIXTURES / f"{name}.txt").read_text().strip(), arity)


@pytest.fixture
def gens():
    def make(m):
        return MultiPoly.gens(m)
    return make


ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[number] = (title, ok, detail)


def acceptance_lines() -> list[str]:
    lines = []
    for number in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
        lines.append(line + (f"  ({detail})" if detail else ""))
    return lines


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines():
            terminalreporter.write_line(line)
