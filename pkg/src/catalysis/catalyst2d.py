"""Useful two-dimensional catalysts.

A qubit catalyst ``c = (c1, c2)`` with ``c1 >= c2 > 0`` is described by its
ratio ``t = c2/c1`` in (0, 1].  It fails to raise P exactly when, for some
pair of indices ``r1 >= r2`` from ``L ∪ {n+1}`` (``r2 <= n``), the bottom
entries ``{c1 x_i : i >= r1} ∪ {c2 x_j : j >= r2}`` form a tail of
``x ⊗ c`` and the same split is a tail of ``y ⊗ c``.  Each such pair gives a
closed band ``M <= t <= m`` of useless ratios; the useful region is the part
of (0, 1) outside every band.

Membership (:func:`is_useful_2d`) is decided from cross-multiplied
inequalities on the raw components and never divides; :func:`region2`
builds the explicit interval list.  The two paths are deliberately separate
so that tests can check one against the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .probvec import ProbVec, ProbVecError
from .vidal import TransformPair, catalysis_admissible, critical_set

Interval = tuple[Fraction, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class PairBound:
    """Useless band ``[M, m]`` for one index pair.  ``m=None`` means +inf."""

    r1: int
    r2: int
    m: Optional[Fraction]
    M: Fraction


@dataclass(frozen=True)
class RatioRegion:
    """Disjoint open subintervals of (0, 1), sorted by left endpoint."""

    intervals: tuple[Interval, ...] = ()

    def __post_init__(self):
        prev_hi = None
        for lo, hi in self.intervals:
            if not (0 <= lo < hi <= 1):
                raise ValueError(f"bad interval ({lo}, {hi})")
            if prev_hi is not None and lo < prev_hi:
                raise ValueError("intervals overlap or are unsorted")
            prev_hi = hi

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __contains__(self, t) -> bool:
        return any(lo < t < hi for lo, hi in self.intervals)

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def endpoints(self) -> list[Fraction]:
        return sorted({e for iv in self.intervals for e in iv})

    def c1_intervals(self) -> list[Interval]:
        """The same region expressed through c1 = 1/(1+t) of a normalized catalyst."""
        # c1 is decreasing in t, so the endpoints swap
        return sorted((1 / (1 + hi), 1 / (1 + lo)) for lo, hi in self.intervals)

    def to_json(self) -> list[list[str]]:
        return [[str(lo), str(hi)] for lo, hi in self.intervals]

    def __str__(self) -> str:
        if not self.intervals:
            return "empty"
        return " ∪ ".join(f"({lo}, {hi})" for lo, hi in self.intervals)


FULL = RatioRegion(((_ZERO, _ONE),))
EMPTY = RatioRegion()


def intersect(a: RatioRegion, b: RatioRegion) -> RatioRegion:
    """Intersection of two unions of open intervals."""
    out = []
    for alo, ahi in a.intervals:
        for blo, bhi in b.intervals:
            lo, hi = max(alo, blo), min(ahi, bhi)
            if lo < hi:
                out.append((lo, hi))
    out.sort()
    return RatioRegion(tuple(out))


def _quot(num: Fraction, den: Fraction):
    # "drop" for 0/0, "inf" for positive/0
    if den == 0:
        return "drop" if num == 0 else "inf"
    return num / den


def _bound(pair: TransformPair, r1: int, r2: int) -> PairBound:
    n = pair.n
    uppers = []
    lowers = []
    for v in (pair.x, pair.y):
        q = _quot(v.at(r1 - 1), v.at(r2))
        if q != "drop":
            uppers.append(q)
        if r1 <= n:
            q = _quot(v.at(r1), v.at(r2 - 1))
            # numerator index >= denominator index, so a positive/0 term cannot occur
            if q not in ("drop", "inf"):
                lowers.append(q)
    finite = [u for u in uppers if u != "inf"]
    m = min(finite) if finite else None
    M = max(lowers) if lowers else _ZERO
    return PairBound(r1, r2, m, M)


def pair_bounds(pair: TransformPair) -> list[PairBound]:
    """Bands for every (r1, r2) with r1, r2 in L ∪ {n+1}, r1 >= r2, r2 <= n."""
    if not catalysis_admissible(pair):
        raise ValueError("pair does not admit catalysis (P = 1 or P = E_n ratio)")
    L = critical_set(pair)
    top = list(L) + [pair.n + 1]
    return [_bound(pair, r1, r2) for r2 in L for r1 in top if r1 >= r2]


def useful_part(bound: PairBound) -> RatioRegion:
    """(0, M) ∪ (m, 1): ratios in (0, 1) that escape this band."""
    m = _ONE if bound.m is None else min(bound.m, _ONE)
    M = bound.M
    if m < M:
        return FULL
    parts = []
    if M > 0:
        parts.append((_ZERO, M))
    if m < 1:
        parts.append((m, _ONE))
    return RatioRegion(tuple(parts))


def region2(pair: TransformPair) -> RatioRegion:
    """Exact set of ratios c2/c1 whose qubit catalyst strictly raises P."""
    if not catalysis_admissible(pair):
        return EMPTY
    region = FULL
    for b in pair_bounds(pair):
        region = intersect(region, useful_part(b))
        if not region:
            break
    return region


def _band_holds(pair: TransformPair, r1: int, r2: int, c1: Fraction, c2: Fraction) -> bool:
    n = pair.n
    for v in (pair.x, pair.y):
        if r1 <= n and c1 * v.at(r1) > c2 * v.at(r2 - 1):
            return False
        if c2 * v.at(r2) > c1 * v.at(r1 - 1):
            return False
    return True


def is_useful_2d(pair: TransformPair, c: ProbVec) -> bool:
    """Whether the qubit catalyst c strictly raises P(x -> y)."""
    if c.n != 2:
        raise ProbVecError(f"expected a 2-dimensional catalyst, got length {c.n}")
    c1, c2 = c.components
    if c2 <= 0:
        raise ProbVecError("catalyst components must be strictly positive")
    if not catalysis_admissible(pair):
        return False
    L = critical_set(pair)
    top = list(L) + [pair.n + 1]
    return not any(
        _band_holds(pair, r1, r2, c1, c2) for r2 in L for r1 in top if r1 >= r2
    )


def exists_2d(pair: TransformPair) -> bool:
    return bool(region2(pair))


def single_critical_test(pair: TransformPair) -> bool:
    """Closed-form existence test valid when L = {l} is a single index.

    min(x_n/x_l, y_n/y_l) < max(x_l/x_{l-1}, y_l/y_{l-1}).
    """
    L = critical_set(pair)
    if len(L) != 1:
        raise ValueError(f"needs exactly one critical index, got {L}")
    (l,) = L
    n, x, y = pair.n, pair.x, pair.y
    # y_l > 0 for l in L, x is strictly positive under admissibility
    lo = min(x.at(n) / x.at(l), y.at(n) / y.at(l))
    hi = max(x.at(l) / x.at(l - 1), y.at(l) / y.at(l - 1))
    return lo < hi


def three_level_region(pair: TransformPair) -> RatioRegion:
    """For n = 3 under admissibility the region is (y3/y2, y2/y1) when nonempty."""
    if pair.n != 3:
        raise ValueError("three_level_region needs n = 3")
    if not catalysis_admissible(pair):
        return EMPTY
    y1, y2, y3 = pair.y.components
    lo, hi = y3 / y2, y2 / y1
    return RatioRegion(((lo, hi),)) if lo < hi else EMPTY
