import pytest
from hypothesis import settings

from projconf.core import Space, canonicalize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def pt(*c):
    return canonicalize(c, Space.P)


def ln(*c):
    return canonicalize(c, Space.PSTAR)


@pytest.fixture
def parabola_hexagon():
    from projconf.conics import parabola_point
    from projconf.polygons import Polygon

    return Polygon.from_vectors([parabola_point(t) for t in range(6)])


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
