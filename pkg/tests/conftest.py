import pytest

from bhtranspose import WeightSystem, parse_polynomial

F60 = "z0^5*z1 + z0*z2^3 + z1^4 + z3^3"
F256 = "z0^17*z2 + z0*z1^5 + z1*z2^3 + z3^2"
G256 = "z0^17*z1 + z1^5*z2 + z0*z2^3 + z3^2"
K3 = "z1^2*z4 + z2^4 + z1*z3^3 + z4^8"


@pytest.fixture
def f60():
    return parse_polynomial(F60)


@pytest.fixture
def f256():
    return parse_polynomial(F256)


@pytest.fixture
def k3():
    return parse_polynomial(K3), WeightSystem((7, 4, 3, 2), 16)


# --- acceptance reporting --------------------------------------------------

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = _ACCEPTANCE.get(report.nodeid)
    if marker is not None:
        _ACCEPTANCE[report.nodeid] = (marker[0], marker[1], report.outcome)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            _ACCEPTANCE[item.nodeid] = (m.args[0], m.args[1], None)


def pytest_terminal_summary(terminalreporter):
    rows = [v for v in _ACCEPTANCE.values() if v[2] is not None]
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(rows, key=lambda r: r[0]):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {title}")
