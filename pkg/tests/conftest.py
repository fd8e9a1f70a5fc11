import pytest

from toricke import corpus
from toricke.fan import Fan

# filled by test_acceptance.py, printed at the end of the session
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fans():
    return {name: corpus.load_fan(name) for name in corpus.names("fan")}


@pytest.fixture
def p2(fans):
    return fans["p2"]


@pytest.fixture
def f1(fans):
    return fans["f1"]


@pytest.fixture
def f2(fans):
    return fans["f2"]


@pytest.fixture
def p1(fans):
    return fans["p1"]


@pytest.fixture
def p112(fans):
    return fans["p112"]


@pytest.fixture
def p123(fans):
    return fans["p123"]


@pytest.fixture
def p1xp1(fans):
    return fans["p1xp1"]


def single_cone_fan():
    return Fan(2, ((1, 0), (0, 1)), ((0, 1),))
