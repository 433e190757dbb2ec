import pytest

from ijord.corpus import CorpusSpec, generate_compositions, generate_descriptors

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def corpus():
    return generate_descriptors(CorpusSpec())


@pytest.fixture(scope="session")
def small_corpus():
    return generate_descriptors(CorpusSpec(max_N=3, max_involution_degrees=1))


@pytest.fixture(scope="session")
def compositions(corpus):
    return generate_compositions(corpus, 120, seed=0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
