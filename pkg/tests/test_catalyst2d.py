import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from catalysis.catalyst2d import (
    EMPTY,
    FULL,
    RatioRegion,
    exists_2d,
    intersect,
    is_useful_2d,
    pair_bounds,
    region2,
    single_critical_test,
    three_level_region,
)
from catalysis.catalystnd import exists_catalyst
from catalysis.oracle import catalyzed_prob, qubit_catalyst
from catalysis.probvec import ProbVecError
from catalysis.vidal import catalysis_admissible, critical_set, make_pair

from conftest import naive_catalyzed, pairs, vec


def test_pair_bounds_pair_c(ex2):
    b = pair_bounds(ex2)
    assert [(p.r1, p.r2) for p in b] == [(3, 3), (5, 3)]
    full = {(p.r1, p.r2): p for p in b}
    assert full[(5, 3)].m == 0 and full[(5, 3)].M == 0
    assert full[(3, 3)].M == 1


def test_pair_bounds_enumeration():
    # E_2 and E_3 ratios are both 2/3, E_4 ratio is 1
    pair = make_pair(vec("0.6", "0.2", "0.1", "0.1"), vec("0.4", "0.3", "0.2", "0.1"))
    assert pair.p == F(2, 3)
    assert critical_set(pair) == (2, 3)
    assert catalysis_admissible(pair)
    assert [(p.r1, p.r2) for p in pair_bounds(pair)] == [(2, 2), (3, 2), (5, 2), (3, 3), (5, 3)]


def test_pair_bounds_requires_admissible():
    x = vec("0.5", "0.5")
    with pytest.raises(ValueError):
        pair_bounds(make_pair(x, x))


def test_region_examples(ex1a, ex1b, ex2):
    assert region2(ex1a).intervals == ((F(1, 4), F(4, 5)),)
    assert region2(ex1a).c1_intervals() == [(F(5, 9), F(4, 5))]
    assert region2(ex1b) == EMPTY
    assert region2(ex2) == FULL


def test_is_useful_examples(ex1a):
    assert is_useful_2d(ex1a, vec("0.65", "0.35"))
    assert not is_useful_2d(ex1a, vec("0.5", "0.5"))
    assert not is_useful_2d(ex1a, vec("0.8", "0.2"))


def test_is_useful_rejects_bad_catalysts(ex1a):
    with pytest.raises(ProbVecError):
        is_useful_2d(ex1a, vec("0.5", "0.3", "0.2"))
    with pytest.raises(ProbVecError):
        is_useful_2d(ex1a, vec(1, 0))


def test_exists_2d_examples(ex1a, ex1b, ex2):
    assert exists_2d(ex1a) and not exists_2d(ex1b) and exists_2d(ex2)


def test_specializations_on_examples(ex1a, ex1b, ex2):
    assert single_critical_test(ex1a) and not single_critical_test(ex1b)
    assert single_critical_test(ex2)
    assert three_level_region(ex1a) == region2(ex1a)
    assert three_level_region(ex1b) == EMPTY


def test_intersect_keeps_shared_endpoint_open():
    a = RatioRegion(((F(0), F(1, 2)), (F(1, 2), F(1))))
    assert intersect(a, FULL) == a
    assert F(1, 2) not in a
    with pytest.raises(ValueError):
        RatioRegion(((F(0), F(2, 3)), (F(1, 2), F(1))))


def _sample_ts(region, rng):
    ts = []
    for lo, hi in region:
        ts.append((lo + hi) / 2)
        ts += [lo + (hi - lo) * F(rng.randint(1, 999), 1000) for _ in range(10)]
    return ts


@settings(max_examples=120, deadline=None)
@given(pairs(min_n=3, max_n=5))
def test_region_sound_complete_and_agreeing(pair):
    rng = random.Random(0)
    region = region2(pair)
    for t in _sample_ts(region, rng):
        c = qubit_catalyst(t)
        assert catalyzed_prob(pair.x, pair.y, c) > pair.p
        assert is_useful_2d(pair, c)
    # grid outside the closure, plus the endpoints themselves
    grid = [F(i, 101) for i in range(1, 101)]
    ends = [e for e in region.endpoints() if 0 < e < 1]
    for t in grid + ends:
        if t in region:
            continue
        c = qubit_catalyst(t)
        assert catalyzed_prob(pair.x, pair.y, c) == pair.p
        assert not is_useful_2d(pair, c)


@given(pairs(min_n=2, max_n=5))
def test_uniform_qubit_never_useful(pair):
    c = vec("0.5", "0.5")
    assert not is_useful_2d(pair, c)
    assert 1 not in region2(pair)


@given(pairs(min_n=3, max_n=5))
def test_specializations_agree(pair):
    if not catalysis_admissible(pair):
        return
    L = critical_set(pair)
    assert L  # P is attained at an interior index whenever catalysis is admissible
    if len(L) == 1:
        assert single_critical_test(pair) == exists_2d(pair)
    if pair.n == 3:
        assert three_level_region(pair) == region2(pair)
        y1, y2, y3 = pair.y.components
        assert (y3 * y1 < y2 * y2) == exists_2d(pair)


@given(pairs(min_n=2, max_n=5))
def test_2d_implies_any_dimension(pair):
    if exists_2d(pair):
        assert exists_catalyst(pair)


def test_region_against_naive_oracle(ex1a):
    for i in range(1, 20):
        t = F(i, 20)
        c = qubit_catalyst(t)
        useful = naive_catalyzed(list(ex1a.x), list(ex1a.y), list(c)) > ex1a.p
        assert useful == (t in region2(ex1a))
