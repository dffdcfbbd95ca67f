import pytest

import acceptance_registry
from squarespan.corpus import load_default_corpus


@pytest.fixture(scope="session")
def corpus_records():
    return load_default_corpus()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = acceptance_registry.lines()
    if not lines:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.line(line)
