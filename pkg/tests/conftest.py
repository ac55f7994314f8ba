import os
import random
import sys

import pytest
from hypothesis import settings

from loceq.gf import SUPPORTED_Q, field
from loceq.graph import LabeledGraph
from loceq.isotropic import BlockDiagMatrix

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def random_graph(rng, q, n, density=0.6):
    m = n * (n - 1) // 2
    return LabeledGraph(q, n, tuple(rng.randrange(1, q) if rng.random() < density else 0 for _ in range(m)))


def random_connected_graph(rng, q, n):
    from loceq.graph import is_connected

    while True:
        G = random_graph(rng, q, n)
        if is_connected(G):
            return G


def random_presentation_matrix(rng, q, n):
    """Random block-diagonal D with constant nonzero det."""
    f = field(q)
    c = rng.choice(f.nonzero)
    Z, T, X, Y = [], [], [], []
    while len(Z) < n:
        z, t, x, y = (rng.randrange(q) for _ in range(4))
        if f.sub[f.mul[z][y]][f.mul[x][t]] == c:
            Z.append(z), T.append(t), X.append(x), Y.append(y)
    return BlockDiagMatrix(q, Z, T, X, Y)


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture(params=SUPPORTED_Q, ids=lambda q: f"q{q}")
def any_q(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
