import numpy as np
import pytest

from tenseki.algebra import AlgebraInstance
from tenseki.corpus import build_corpus, fixtures, strict_chain_fixture
from tenseki.dli import heyting_residual
from tenseki.lattice import build_lattice, chain, product_lattice

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def fx():
    """Named fixtures: B2, C3, B2xB2 (Heyting, identity tense operators),
    C3strict, and plain lattices."""
    b2, c3, sq = fixtures()
    return {"B2": b2, "C3": c3, "B2xB2": sq, "C3strict": strict_chain_fixture()}


@pytest.fixture
def b2_classical():
    lat = chain(2)
    return AlgebraInstance(lat, {"imp": heyting_residual(lat)}, "heyting", "B2")


@pytest.fixture
def c3():
    return build_lattice(["0", "m", "1"], [("0", "m"), ("m", "1")])


@pytest.fixture
def square():
    return product_lattice(chain(2), chain(2))


def table(rows):
    return np.array(rows, dtype=np.int64)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
