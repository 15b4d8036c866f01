import pytest
from hypothesis import HealthCheck, settings

from geotrans import construct as C
from geotrans.autgrp import automorphism_group

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def kg62():
    g = C.kneser(6, 2)
    return g, C.kneser_action(6, 2)


@pytest.fixture(scope="session")
def h35():
    return C.hamming(3, 5), C.hamming_group(3, 5)


@pytest.fixture(scope="session")
def psl_coset():
    return C.example51(23)


@pytest.fixture(scope="session")
def foster():
    g = C.foster_graph()
    return g, automorphism_group(g)


@pytest.fixture(scope="session")
def heawood():
    return C.pg_incidence(2)
