import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from digraph_spectra import DirectedWeightedGraph, cycle, random_balanced

settings.register_profile(
    "repo", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("repo")


@st.composite
def balanced_graphs(draw, n_min=2, n_max=8):
    n = draw(st.integers(n_min, n_max))
    extra = draw(st.integers(0, n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_balanced(n, extra, seed, random_measure=draw(st.booleans()))


@pytest.fixture
def c3():
    return cycle(3)


@pytest.fixture
def triangle():
    """Symmetric simple triangle on a, b, c."""
    return DirectedWeightedGraph(["a", "b", "c"], [(x, y) for x in "abc" for y in "abc" if x != y])


def random_complex(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k])
