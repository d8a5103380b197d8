import pytest

from gaussforge import connected_sum, parse

T3_CODE = "O1+U2+O3+U1+O2+U3+"
VT_CODE = "O1+O2+U1+U2+"
# Linking: a-b, a-c, b-d with a=1, b=2, c=3, d=4.
NI4_CODE = "O3+O1+U3+O2+U1+O4+U2+U4+"
INS_CODE = "O1+U2+O3+U1+O2+U3+O4+O5+U4+U5+"
K1_CODE = "O1+U1+"
R2F_CODE = "O1+O2-U2-U1+"

NI4_LABELS = {"a": 1, "b": 2, "c": 3, "d": 4}

# Acceptance results, printed in the terminal summary.
ACCEPTANCE_LINES = []


@pytest.fixture
def T3():
    return parse(T3_CODE)


@pytest.fixture
def VT():
    return parse(VT_CODE)


@pytest.fixture
def NI4():
    return parse(NI4_CODE)


@pytest.fixture
def INS():
    return connected_sum(parse(T3_CODE), parse(VT_CODE), 5)


@pytest.fixture
def K1():
    return parse(K1_CODE)


@pytest.fixture
def R2F():
    return parse(R2F_CODE)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
