from importlib import resources
from pathlib import Path

import pytest

from contentzone.anaphora import Actor, Gender, load_actors

FIXTURES = Path(str(resources.files("contentzone") / "data" / "fixtures"))

PASSAGE = (FIXTURES / "passage" / "gold.txt").read_text(encoding="utf-8")


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def passage_gold() -> str:
    return PASSAGE


@pytest.fixture
def passage_plain() -> str:
    from contentzone.evaluation import parse_gold

    return parse_gold(PASSAGE)[0]


@pytest.fixture
def harry_hedwig() -> list[Actor]:
    return [Actor("Harry", Gender.MALE), Actor("Hedwig", Gender.FEMALE)]


def fixture_actors(name: str) -> list[Actor]:
    return load_actors(FIXTURES / name / "actors.json")


_CRITERIA: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the line is printed in the terminal summary."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        line = (label, bool(ok), detail)
        _CRITERIA.append(line)
        print(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
