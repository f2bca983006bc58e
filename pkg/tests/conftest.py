import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from spsymbols.rings import ZI, ZW, ZZ  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

RINGS = (ZZ, ZI, ZW)


def elements(ring, size=30):
    if ring is ZZ:
        return st.integers(-size, size)
    return st.builds(ring, st.integers(-size, size), st.integers(-size, size))


def nonzero(ring, size=30):
    return elements(ring, size).filter(bool)


ring_st = st.sampled_from(RINGS)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
