import time
from pathlib import Path

import pytest

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
ACCEPTANCE: list = []


@pytest.fixture
def corpus() -> Path:
    return CORPUS


class Criterion:
    """Times one acceptance criterion and records a pass/fail line."""

    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, typ, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = typ is None and elapsed < self.limit
        note = "" if typ is None else f" ({typ.__name__})"
        line = f"[{'PASS' if ok else 'FAIL'}] {self.number:2d} {self.title}: {elapsed:.2f}s (limit {self.limit:g}s){note}"
        ACCEPTANCE.append((self.number, line))
        print(line)
        if typ is None:
            assert elapsed < self.limit, line
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
