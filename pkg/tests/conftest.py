import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from suqconn.graphs import Edge, FramedGraph, Graph
from suqconn.hopf import H, algebra
from suqconn.morphisms import make_xi
from suqconn.scalars import Phase

settings.register_profile(
    "suqconn",
    deadline=None,
    max_examples=30,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("suqconn")

H1 = algebra(1)

# lines collected by test_acceptance and printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# ==== strategies ===========================================================

seeds = st.integers(min_value=0, max_value=2**32 - 1)
rngs = seeds.map(random.Random)


@st.composite
def phases(draw, max_den=24):
    d = draw(st.integers(1, max_den))
    return Phase(Fraction(draw(st.integers(0, d - 1)), d))


# ==== fixtures =============================================================


def E(lo, hi, fwd=True, curve="c"):
    return Edge(curve, Fraction(lo), Fraction(hi), fwd)


@pytest.fixture
def alg():
    return H


@pytest.fixture
def alg1():
    return H1


@pytest.fixture
def xi0():
    return make_xi(Phase(0), H)


@pytest.fixture
def two_edges():
    """``{[0,1]f, [1,2]f}`` refining ``{[0,2]f}``."""
    return Graph([E(0, 2)]), Graph([E(0, 1), E(1, 2)])


def framed(pairs):
    return FramedGraph({e: t for e, t in pairs})
