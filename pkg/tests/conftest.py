import pytest

from ccgpas import demo_lexicon_path, load_lexicon_file
from ccgpas.category import Label, parse_category
from ccgpas.comb import Constant, parse_term
from ccgpas.parser import Edge


@pytest.fixture(scope="session")
def lex():
    return load_lexicon_file(demo_lexicon_path())


def edge(start, category, semantics, label=Label.OT, end=None):
    """A lexical-looking edge from text forms, for driving rules directly."""
    sem = parse_term(semantics) if isinstance(semantics, str) else semantics
    return Edge(start, start + 1 if end is None else end, parse_category(category), label, sem,
                "lex", (), str(sem))


def lexed(pairs):
    """One single-reading cell per (category, constant) pair."""
    return [[edge(i, cat, Constant(name))] for i, (cat, name) in enumerate(pairs)]


# one "criterion N: PASS/FAIL" line per acceptance check, shown after the run
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
