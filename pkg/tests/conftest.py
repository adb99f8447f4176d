import pytest

from cohoc.algebra import make_presentation
from cohoc.documents import load_document

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


def fixture(name):
    return load_document(f"fixtures:{name}").build()


@pytest.fixture(scope="session")
def s9():
    return fixture("s9_G")


@pytest.fixture(scope="session")
def s9_U():
    return fixture("s9_U")


@pytest.fixture(scope="session")
def res_U():
    return fixture("res_G_to_U")


@pytest.fixture(scope="session")
def zetas(s9):
    dickson = fixture("s9_dickson")
    z = {f"zeta_{i}": f.rebind(s9) for i, f in enumerate(dickson.elements, start=1)}
    z["zeta_1_tilde"] = s9.parse("b_2_0^2 + c_4_0")
    z["zeta_4_tilde"] = s9.parse("b_1_0^6 + b_6_0")
    return z


@pytest.fixture
def xy():
    return make_presentation(2, [("x", 1), ("y", 1)], [])
