"""Exit criteria.  Run with ``pytest tests/test_acceptance.py -v``; each test
prints one PASS/FAIL line for its criterion."""

import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

from catalysis import catalyst2d, cli, sweep
from catalysis.catalyst2d import is_useful_2d, pair_bounds, region2, three_level_region
from catalysis.catalystnd import construct_catalyst, exists_catalyst
from catalysis.oracle import (
    catalyzed_prob,
    qubit_catalyst,
    random_pair,
    random_probvec,
    scan_region2,
    search_catalyst,
    verify_useful,
)
from catalysis.probvec import ProbVec, majorized_by
from catalysis.vidal import critical_set

from conftest import vec


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def check(label):
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"\n[FAIL] {label}")
            raise
        with capsys.disabled():
            print(f"\n[PASS] {label}")

    return check


def test_ac1_reference_pair_a(criterion, ex1a):
    with criterion("AC1 pair A: S = (1/4, 4/5), c1 in (5/9, 4/5), (0.65, 0.35) useful"):
        region = region2(ex1a)
        assert region.intervals == ((F(1, 4), F(4, 5)),)
        assert region.c1_intervals() == [(F(5, 9), F(4, 5))]
        rep = verify_useful(ex1a.x, ex1a.y, vec("0.65", "0.35"))
        assert rep.useful and rep.p_after > F(4, 5)
        assert is_useful_2d(ex1a, vec("0.65", "0.35"))


def test_ac2_reference_pair_b(criterion, ex1b):
    with criterion("AC2 pair B: S empty, P = 4/5, oracle scan at 50 finds nothing"):
        assert ex1b.p == F(4, 5)
        assert region2(ex1b).is_empty
        assert not any(s.useful for s in scan_region2(ex1b, 50))


def test_ac3_reference_pair_c(criterion, ex2):
    with criterion("AC3 pair C: L = {3}, m = 0, M = 1, S = (0, 1), useful at t = 0.1..0.9"):
        assert critical_set(ex2) == (3,)
        bounds = {(b.r1, b.r2): b for b in pair_bounds(ex2)}
        assert bounds[(5, 3)].m == 0  # min{x4/x3, y4/y3} = min{1, 0}
        assert bounds[(3, 3)].M == 1  # max{x3/x2, y3/y2} = max{1/4, 1}
        assert region2(ex2).intervals == ((F(0), F(1)),)
        samples = scan_region2(ex2, 10)
        assert [s.t for s in samples] == [F(i, 10) for i in range(1, 10)]
        assert all(s.useful for s in samples)


def test_ac4_worked_construction(criterion, ex1b):
    with criterion("AC4 construction with alpha = 801/1000: k = 6, P after > 4/5"):
        alpha = F(801, 1000)
        trace = construct_catalyst(ex1b, alpha=alpha)
        assert trace.k == 6
        s = sum(alpha**j for j in range(6))
        assert trace.catalyst.components == tuple(alpha**j / s for j in range(6))
        assert catalyzed_prob(ex1b.x, ex1b.y, trace.catalyst) > F(4, 5)


def test_ac5_two_dim_criterion_matches_oracle(criterion, capsys, monkeypatch):
    with criterion("AC5 2D criterion vs oracle: 200 admissible pairs x 49 ratios, zero disagreements, < 60 s"):
        t0 = time.perf_counter()
        rng = random.Random(20040901)
        drawn = [random_pair(rng, dims=(3, 4, 5), admissible=True) for _ in range(200)]
        rows = []
        for i, pair in enumerate(drawn):
            rows += sweep.sweep_grid(pair, 50, "exact", pair_id=i)
        elapsed = time.perf_counter() - t0
        assert len(rows) == 200 * 49
        assert {p.n for p in drawn} == {3, 4, 5}
        bad = [r for r in rows if not r.agree]
        assert not bad, bad[:5]
        assert elapsed < 60
        # the CLI path signals a disagreement with exit status 3
        assert cli.main(["sweep", "random", "--pairs", "200", "--seed", "1"]) == 0
        monkeypatch.setattr(sweep, "is_useful_2d", lambda pair, c: True)
        assert cli.main(["sweep", "random", "--pairs", "3", "--seed", "1"]) == 3
        capsys.readouterr()


def test_ac6_existence_sound_and_complete(criterion):
    with criterion("AC6 existence: 100+ random pairs, construction improves P / grid search finds nothing"):
        rng = random.Random(6)
        seen = {True: 0, False: 0}
        for _ in range(160):
            pair = random_pair(rng, dims=(2, 3, 4, 5), admissible=None)
            ok = exists_catalyst(pair)
            seen[ok] += 1
            if ok:
                trace = construct_catalyst(pair)
                assert catalyzed_prob(pair.x, pair.y, trace.catalyst) > pair.p
            else:
                assert search_catalyst(pair, 4, 20) is None
        assert seen[True] >= 20 and seen[False] >= 20


def test_ac7_structural_invariants(criterion):
    with criterion("AC7 invariants over 500 random instances (plus 500 admissible n = 3 pairs)"):
        rng = random.Random(7)
        for i in range(500):
            pair = random_pair(rng, dims=(2, 3, 4, 5), admissible=None,
                               denominator=rng.choice((20, 1000)), allow_zeros=(i % 3 == 0))
            assert (pair.p == 1) == majorized_by(pair.x, pair.y)
            c = random_probvec(rng.randint(1, 4), rng, denominator=100)
            rep = verify_useful(pair.x, pair.y, c)
            assert rep.p_after >= rep.p_before
            padded = ProbVec(c.components + (F(0),))
            assert catalyzed_prob(pair.x, pair.y, padded) == rep.p_after
            assert not is_useful_2d(pair, vec("0.5", "0.5"))
            assert catalyzed_prob(pair.x, pair.y, qubit_catalyst(F(1))) == pair.p
        for _ in range(500):
            pair = random_pair(rng, dims=(3,), admissible=True, denominator=rng.choice((20, 1000)))
            y1, y2, y3 = pair.y.components
            lo, hi = y3 / y2, y2 / y1
            expected = catalyst2d.RatioRegion(((lo, hi),)) if lo < hi else catalyst2d.EMPTY
            assert region2(pair) == expected == three_level_region(pair)
