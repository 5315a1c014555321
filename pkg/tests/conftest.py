import functools

import pytest

from tangram_enum import canon, catalog
from tangram_enum.solver import enumerate_partitions


@functools.lru_cache(maxsize=None)
def labeled(n: int, kind: str = "japanese"):
    region = catalog.shape_by_number(n).region
    return tuple(enumerate_partitions(region, catalog.tan_set(kind)))


@functools.lru_cache(maxsize=None)
def canonicals(n: int, kind: str = "japanese"):
    region = catalog.shape_by_number(n).region
    return tuple(canon.dedupe(labeled(n, kind), region))


def region(n: int):
    return catalog.shape_by_number(n).region


@pytest.fixture(scope="session")
def japanese():
    return catalog.tan_set("japanese")


@pytest.fixture(scope="session")
def chinese():
    return catalog.tan_set("chinese")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
