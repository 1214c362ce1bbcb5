import random

import pytest
from hypothesis import strategies as st

from nodalbn import NodalCurve, circular_curve, two_component_curve


def random_curve(rng: random.Random, max_gamma=8, max_mult=3, max_genus=3, min_genus_total=0):
    """Connected curve: a random spanning tree plus random extra multiplicities."""
    while True:
        n = rng.randint(1, max_gamma)
        genera = [rng.randint(0, max_genus) for _ in range(n)]
        mult = {}
        for v in range(1, n):
            u = rng.randrange(v)
            mult[(u, v)] = rng.randint(1, max_mult)
        for a in range(n):
            for b in range(a + 1, n):
                if (a, b) not in mult and rng.random() < 0.3:
                    mult[(a, b)] = rng.randint(1, max_mult)
        edges = [pair for pair, m in mult.items() for _ in range(m)]
        curve = NodalCurve.build(genera, edges)
        if len(edges) - n + 1 + sum(genera) >= min_genus_total:
            return curve


@st.composite
def curves(draw, max_gamma=6, max_mult=3, max_genus=3, min_genus_total=0):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_curve(random.Random(seed), max_gamma, max_mult, max_genus, min_genus_total)


def random_degree(rng: random.Random, curve, total, low=-2, high=None):
    """Multidegree with entries in ``[low, high]`` summing to ``total``, or None."""
    high = max(curve.genera) + 2 if high is None else high
    for _ in range(200):
        d = [rng.randint(low, high) for _ in range(curve.gamma - 1)]
        last = total - sum(d)
        if low <= last <= high:
            return tuple(d + [last])
    return None


@pytest.fixture
def two_211():
    return two_component_curve(2, 1, 1)


@pytest.fixture
def circ3():
    return circular_curve([1, 1, 1])


@pytest.fixture
def circ4():
    return circular_curve([1, 1, 1, 1])


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
