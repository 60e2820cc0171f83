from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


def load_corpus(name):
    lines = (DATA / name).read_text(encoding="utf-8").splitlines()
    return [ln for ln in lines if ln.strip() and not ln.startswith("#")]


@pytest.fixture(scope="session")
def root_corpus():
    return load_corpus("root_corpus.txt")


@pytest.fixture(scope="session")
def numexpr_corpus():
    return load_corpus("numexpr_corpus.txt")


# verdict lines recorded by test_acceptance, repeated in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
