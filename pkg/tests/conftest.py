import mpmath
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "thetacert",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("thetacert")


@pytest.fixture(autouse=True)
def _reset_mp():
    # every test starts and ends at mpmath's default context
    mpmath.mp.prec = 53
    yield
    mpmath.mp.prec = 53


def digits_agree(x, y, scale=1):
    """Number of agreeing decimal digits of two mpfs, relative to max(scale, |x|)."""
    with mpmath.workprec(max(x.context.prec, 2000)):
        diff = abs(mpmath.mpf(x) - mpmath.mpf(y))
        if diff == 0:
            return 10 ** 6
        return int(mpmath.floor(-mpmath.log10(diff / max(mpmath.mpf(scale), abs(x)))))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
