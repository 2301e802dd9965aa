"""Brute-force ground truth for catalysis claims.

Everything here evaluates P(x ⊗ c -> y ⊗ c) directly on the full tensor
spectra; nothing consults the critical set or the closed-form regions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .probvec import ProbVec, ProbVecError, from_weights, tensor, tensor_weights
from .vidal import (
    TransformPair,
    attaining_indices,
    catalysis_admissible,
    make_pair,
    max_prob,
    max_prob_weights,
)

FLOAT_RTOL = 1e-12


def catalyzed_prob(x: ProbVec, y: ProbVec, c: ProbVec) -> Fraction:
    """P(x ⊗ c -> y ⊗ c) evaluated on the full sorted product spectra."""
    if x.n != y.n:
        raise ProbVecError(f"dimension mismatch: {x.n} vs {y.n}")
    wx, dx = tensor_weights(x, c)
    wy, dy = tensor_weights(y, c)
    return max_prob_weights(wx, dx, wy, dy)


def qubit_catalyst(t: Fraction) -> ProbVec:
    """Normalized (1, t) for a ratio 0 < t <= 1."""
    t = Fraction(t)
    return ProbVec((1 / (1 + t), t / (1 + t)))


@dataclass(frozen=True)
class CatalystReport:
    catalyst: ProbVec
    p_before: Fraction
    p_after: Fraction
    useful: bool
    # for useless catalysts: a tail index of x⊗c where the minimum P is still attained
    witness_index: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "catalyst": self.catalyst.to_strings(),
            "p_before": str(self.p_before),
            "p_after": str(self.p_after),
            "useful": self.useful,
            "witness_index": self.witness_index,
        }


def verify_useful(x: ProbVec, y: ProbVec, c: ProbVec) -> CatalystReport:
    p_before = max_prob(x, y)
    p_after = catalyzed_prob(x, y, c)
    useful = p_after > p_before
    witness = None
    if not useful:
        hits = attaining_indices(tensor(x, c), tensor(y, c), p_before)
        witness = hits[0] if hits else None
    return CatalystReport(c, p_before, p_after, useful, witness)


@dataclass(frozen=True)
class RegionSample:
    index: int
    t: Fraction
    p_after: Fraction
    useful: bool


def scan_region2(pair: TransformPair, resolution: int) -> list[RegionSample]:
    """Classify t = i/resolution, i = 1..resolution-1, by direct evaluation."""
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    out = []
    for i in range(1, resolution):
        t = Fraction(i, resolution)
        pa = catalyzed_prob(pair.x, pair.y, qubit_catalyst(t))
        out.append(RegionSample(i, t, pa, pa > pair.p))
    return out


def sorted_compositions(total: int, parts: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into exactly ``parts`` positive parts, nonincreasing."""
    if largest is None:
        largest = total
    if parts == 1:
        if 1 <= total <= largest:
            yield (total,)
        return
    # the first part is at least ceil(total/parts) and leaves >= 1 for each remaining part
    hi = min(largest, total - (parts - 1))
    lo = -(-total // parts)
    for first in range(hi, lo - 1, -1):
        for rest in sorted_compositions(total - first, parts - 1, first):
            yield (first,) + rest


def search_catalyst(pair: TransformPair, dmax: int, resolution: int) -> Optional[CatalystReport]:
    """First useful catalyst on the simplex grid, lowest dimension first."""
    if dmax < 2:
        raise ValueError("dmax must be at least 2")
    for d in range(2, dmax + 1):
        for w in sorted_compositions(resolution, d):
            c = from_weights(w)
            pa = catalyzed_prob(pair.x, pair.y, c)
            if pa > pair.p:
                return CatalystReport(c, pair.p, pa, True)
    return None


# float backend, for large sweeps only


def _float_tails(v: np.ndarray) -> np.ndarray:
    return np.cumsum(v[::-1])[::-1]


def max_prob_float(x, y) -> float:
    x = np.sort(np.asarray(x, dtype=float))[::-1]
    y = np.sort(np.asarray(y, dtype=float))[::-1]
    ex, ey = _float_tails(x), _float_tails(y)
    ok = ey > 0
    return float(np.min(ex[ok] / ey[ok]))


def catalyzed_prob_float(x, y, c) -> float:
    c = np.asarray(c, dtype=float)
    return max_prob_float(np.outer(np.asarray(x, float), c).ravel(), np.outer(np.asarray(y, float), c).ravel())


def useful_float(x, y, c, rtol: float = FLOAT_RTOL) -> tuple[float, float, bool]:
    before = max_prob_float(x, y)
    after = catalyzed_prob_float(x, y, c)
    return before, after, after > before * (1 + rtol)


# random instances


def random_probvec(n: int, rng: random.Random, denominator: int = 1000, allow_zeros: bool = False) -> ProbVec:
    """Uniform random composition of ``denominator`` into n parts, sorted."""
    if allow_zeros:
        cuts = sorted(rng.randint(0, denominator) for _ in range(n - 1))
    else:
        cuts = sorted(rng.sample(range(1, denominator), n - 1))
    bounds = [0] + cuts + [denominator]
    parts = [b - a for a, b in zip(bounds, bounds[1:])]
    return ProbVec(tuple(sorted((Fraction(p, denominator) for p in parts), reverse=True)))


def random_pair(
    rng: random.Random,
    dims=(3, 4, 5),
    admissible: Optional[bool] = True,
    denominator: int = 1000,
    allow_zeros: bool = False,
    max_tries: int = 10_000,
) -> TransformPair:
    """Draw a pair; ``admissible`` True/False filters on catalysis admissibility, None keeps any."""
    for _ in range(max_tries):
        n = rng.choice(dims)
        x = random_probvec(n, rng, denominator, allow_zeros)
        y = random_probvec(n, rng, denominator, allow_zeros)
        pair = make_pair(x, y)
        if admissible is None or catalysis_admissible(pair) == admissible:
            return pair
    raise RuntimeError("could not draw a pair with the requested admissibility")
