import mpmath
import pytest

from zil import make_context


@pytest.fixture(scope="session")
def ctx():
    return make_context(40)


@pytest.fixture(scope="session", params=[30, 40], ids=lambda d: f"d{d}")
def pctx(request):
    return make_context(request.param)


@pytest.fixture
def ref():
    """Independent mpmath reference at 60 digits."""
    with mpmath.workdps(60):
        yield mpmath


def close(a, b, digits):
    a, b = mpmath.mpf(a), mpmath.mpf(b)
    scale = max(abs(b), mpmath.mpf(1) if b == 0 else abs(b))
    return abs(a - b) <= scale * mpmath.mpf(10) ** (-digits)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.LINES):
        terminalreporter.write_line(mod.LINES[n])
