import random

import pytest
from hypothesis import HealthCheck, settings

from hyperlef import constructions

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def curve_table():
    return constructions.load_curve_table()


@pytest.fixture(scope="session")
def matsumoto(curve_table):
    return constructions.matsumoto_fibration(curve_table)


@pytest.fixture(scope="session")
def family3(curve_table):
    return constructions.family_mn(3, curve_table)


@pytest.fixture()
def rng():
    return random.Random(20260823)


def pytest_terminal_summary(terminalreporter):
    import sys
    acceptance = sys.modules.get("test_acceptance")
    verdicts = getattr(acceptance, "VERDICTS", None)
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for line in verdicts:
            terminalreporter.write_line(line)
