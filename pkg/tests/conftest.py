import functools

import pytest
from hypothesis import HealthCheck, settings

from gliderca import fixtures
from gliderca.glider import build_GX

settings.register_profile("desk", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("desk")


@functools.lru_cache(maxsize=None)
def built(name: str):
    shifts = {"full": fixtures.full_shift, "even": fixtures.even_shift,
              "golden": fixtures.golden_mean_shift, "coded": fixtures.coded_0_111}
    return build_GX(shifts[name](), "0")


@pytest.fixture(scope="session")
def even():
    return fixtures.even_shift()


@pytest.fixture(scope="session")
def full():
    return fixtures.full_shift()


@pytest.fixture(scope="session")
def golden():
    return fixtures.golden_mean_shift()


@pytest.fixture(scope="session")
def even_sys():
    return fixtures.fixture_even()


@pytest.fixture(scope="session")
def full_sys():
    return built("full")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
