from fractions import Fraction

import pytest
from hypothesis import strategies as st

from catalysis.probvec import from_weights, make_probvec
from catalysis.vidal import make_pair

F = Fraction


def vec(*entries):
    return make_probvec([str(e) for e in entries])


@pytest.fixture
def ex1a():
    """Pair A: a 2D catalyst helps."""
    return make_pair(vec("0.6", "0.2", "0.2"), vec("0.5", "0.4", "0.1"))


@pytest.fixture
def ex1b():
    """Pair B: no 2D catalyst helps, a larger one does."""
    return make_pair(vec("0.6", "0.2", "0.2"), vec("0.5", "0.3", "0.2"))


@pytest.fixture
def ex2():
    return make_pair(vec("0.4", "0.4", "0.1", "0.1"), vec("0.5", "0.25", "0.25", "0"))


# independent reference implementations: plain Fractions, straight from the definitions


def naive_tensor(a, b):
    return sorted((i * j for i in a for j in b), reverse=True)


def naive_max_prob(x, y):
    n = max(len(x), len(y))
    xs = sorted(list(x) + [F(0)] * (n - len(x)), reverse=True)
    ys = sorted(list(y) + [F(0)] * (n - len(y)), reverse=True)
    best = None
    for l in range(n):
        ey = sum(ys[l:], F(0))
        if ey == 0:
            continue
        r = sum(xs[l:], F(0)) / ey
        if best is None or r < best:
            best = r
    return best


def naive_catalyzed(x, y, c):
    return naive_max_prob(naive_tensor(x, c), naive_tensor(y, c))


# hypothesis strategies


def probvecs(min_size=1, max_size=6, zeros=True):
    lo = 0 if zeros else 1
    return (
        st.lists(st.integers(lo, 60), min_size=min_size, max_size=max_size)
        .filter(lambda w: sum(w) > 0)
        .map(from_weights)
    )


@st.composite
def pairs(draw, min_n=2, max_n=5, zeros=True):
    n = draw(st.integers(min_n, max_n))
    x = draw(probvecs(n, n, zeros))
    y = draw(probvecs(n, n, zeros))
    return make_pair(x, y)


catalysts = probvecs(1, 4, zeros=False)
