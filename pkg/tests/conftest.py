import functools
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from ordtop.order import enumerate_posets, named  # noqa: E402
from ordtop.space import alexandroff  # noqa: E402

NAMED = ["one", "C2", "A2", "P3", "M4"]


@functools.lru_cache(maxsize=None)
def posets_upto(n):
    return tuple(P for k in range(1, n + 1) for P in enumerate_posets(k))


@functools.lru_cache(maxsize=None)
def spaces_upto(n):
    return tuple(alexandroff(P) for P in posets_upto(n))


def space(name):
    return alexandroff(named(name))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
