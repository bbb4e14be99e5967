from __future__ import annotations

import sys
from fractions import Fraction
from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from chromtools.graph import Graph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = set(chosen)
    if connected:
        # a random spanning tree keeps every draw connected
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
    return Graph(n, frozenset(edges))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_ints = st.integers(-9, 9)


@st.composite
def polys(draw, max_degree: int = 6, integral: bool = False):
    from chromtools.poly import Poly

    coeff = small_ints if integral else rationals
    return Poly(draw(st.lists(coeff, max_size=max_degree + 1)))


def frac(text: str) -> Fraction:
    return Fraction(text)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number][1])
