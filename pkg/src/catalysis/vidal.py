"""Maximal LOCC conversion probability between pure states.

For sorted Schmidt vectors x, y of common length n the optimal probability
is ``min_l E_l(x) / E_l(y)`` over tail sums (Vidal's formula).  Indices with
``E_l(y) = 0`` impose no constraint and are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .probvec import ProbVec, ProbVecError, TailSums, common_dimension, integer_weights, tail_sums


def _tails(w: list[int]) -> list[int]:
    acc = 0
    out = []
    for a in reversed(w):
        acc += a
        out.append(acc)
    out.reverse()
    return out


def max_prob_weights(wx: list[int], dx: int, wy: list[int], dy: int) -> Fraction:
    """Vidal minimum for x = wx/dx, y = wy/dy given as sorted integer weights."""
    if len(wx) != len(wy):
        raise ProbVecError(
            f"dimension mismatch: {len(wx)} vs {len(wy)} (apply common_dimension first)"
        )
    tx, ty = _tails(wx), _tails(wy)
    # l = 1 always contributes 1, i.e. tx[0]/ty[0] after rescaling
    num, den = tx[0], ty[0]
    for a, b in zip(tx[1:], ty[1:]):
        if b == 0:
            continue
        if a * den < num * b:
            num, den = a, b
    return Fraction(num * dy, den * dx)


def max_prob(x: ProbVec, y: ProbVec) -> Fraction:
    """Optimal probability of converting x into y by LOCC."""
    wx, dx = integer_weights(x)
    wy, dy = integer_weights(y)
    return max_prob_weights(wx, dx, wy, dy)


def attaining_indices(x: ProbVec, y: ProbVec, p: Fraction) -> list[int]:
    """All 1-based l with E_l(y) > 0 and E_l(x) = p * E_l(y)."""
    ex, ey = tail_sums(x), tail_sums(y)
    return [
        l
        for l, (a, b) in enumerate(zip(ex.values, ey.values), start=1)
        if b > 0 and a == p * b
    ]


@dataclass(frozen=True)
class TransformPair:
    """A source/target pair at common dimension, with cached tails and P."""

    x: ProbVec
    y: ProbVec
    ex: TailSums
    ey: TailSums
    p: Fraction

    @property
    def n(self) -> int:
        return self.x.n

    def ratio_at(self, l: int) -> Fraction | None:
        """E_l(x)/E_l(y), or None where E_l(y) = 0."""
        b = self.ey.E(l)
        return None if b == 0 else self.ex.E(l) / b


def make_pair(x: ProbVec, y: ProbVec) -> TransformPair:
    x, y = common_dimension(x, y)
    return TransformPair(x, y, tail_sums(x), tail_sums(y), max_prob(x, y))


def critical_set(pair: TransformPair) -> tuple[int, ...]:
    """Interior indices 1 < l < n at which the minimum P is attained."""
    n, p = pair.n, pair.p
    return tuple(
        l
        for l in range(2, n)
        if pair.ey.E(l) > 0 and pair.ex.E(l) == p * pair.ey.E(l)
    )


def catalysis_admissible(pair: TransformPair) -> bool:
    """Whether P < 1 and P < E_n(x)/E_n(y) (the latter is +inf when y_n = 0).

    When this fails no catalyst of any dimension changes P.
    """
    p = pair.p
    if p >= 1:
        return False
    xn, yn = pair.x.at(pair.n), pair.y.at(pair.n)
    return yn == 0 or p * yn < xn
