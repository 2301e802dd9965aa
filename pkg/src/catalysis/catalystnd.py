"""Existence and explicit construction of a useful catalyst of any dimension.

A useful catalyst exists iff ``P < min(x_n / y_n, 1)``.  When it does, a
geometric catalyst ``(1, a, a^2, ..., a^(k-1))`` (normalized) works for any
ratio ``a`` strictly between a pair-dependent lower bound and 1, with ``k``
the smallest integer such that ``x_n > x_h a^(k-1)``; ``h`` is the first
index where ``x_h != P y_h``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .probvec import ProbVec, from_weights, tensor_weights
from .vidal import TransformPair, max_prob_weights


class NoCatalystError(ValueError):
    """The pair has no useful catalyst of any dimension."""


class ConstructionError(RuntimeError):
    """The constructed catalyst failed its own verification (a bug)."""


def exists_catalyst(pair: TransformPair) -> bool:
    p = pair.p
    xn, yn = pair.x.at(pair.n), pair.y.at(pair.n)
    return p < 1 and (yn == 0 or p * yn < xn)


def first_deviation(pair: TransformPair) -> int:
    """Smallest 1-based h with x_h != P y_h."""
    for h in range(1, pair.n + 1):
        if pair.x.at(h) != pair.p * pair.y.at(h):
            break
    else:
        raise ConstructionError("x = P*y componentwise, which forces P = 1")
    if h >= pair.n:
        raise ConstructionError(f"first deviation at h = {h} = n; expected h < n")
    return h


@dataclass(frozen=True)
class AlphaBounds:
    h: int
    tail_bound: Fraction  # P y_n / x_n
    h_bound: Fraction  # x_h/(P y_h) if P > x_h/y_h else P y_h / x_h
    h_branch: str  # "P>x_h/y_h" or "P<x_h/y_h"

    @property
    def alpha_min(self) -> Fraction:
        return max(self.tail_bound, self.h_bound)


def alpha_bound_terms(pair: TransformPair) -> AlphaBounds:
    if not exists_catalyst(pair):
        raise NoCatalystError(
            f"P = {pair.p} is not below min(x_n/y_n, 1); no catalyst can help"
        )
    p, n = pair.p, pair.n
    h = first_deviation(pair)
    xh, yh = pair.x.at(h), pair.y.at(h)
    tail = p * pair.y.at(n) / pair.x.at(n)
    if p * yh > xh:
        hb, branch = xh / (p * yh), "P>x_h/y_h"
    else:
        hb, branch = p * yh / xh, "P<x_h/y_h"
    bounds = AlphaBounds(h, tail, hb, branch)
    if not bounds.alpha_min < 1:
        raise ConstructionError(f"alpha_min = {bounds.alpha_min} is not below 1")
    return bounds


def alpha_bounds(pair: TransformPair) -> Fraction:
    """Greatest lower bound for the geometric ratio of the catalyst."""
    return alpha_bound_terms(pair).alpha_min


def geometric_length(xn: Fraction, xh: Fraction, alpha: Fraction) -> int:
    """Smallest k >= 1 with xn > xh * alpha**(k-1), by exact integer comparison."""
    if not 0 < alpha < 1 or xn <= 0:
        raise ValueError("need 0 < alpha < 1 and xn > 0")
    # xn > xh (p/q)^j  <=>  xn.num * xh.den * q^j > xh.num * xn.den * p^j
    lhs = xn.numerator * xh.denominator
    rhs = xh.numerator * xn.denominator
    p, q = alpha.numerator, alpha.denominator
    k = 1
    while not lhs > rhs:
        lhs *= q
        rhs *= p
        k += 1
    return k


def geometric_catalyst(alpha: Fraction, k: int) -> ProbVec:
    """Normalized (1, alpha, ..., alpha^(k-1))."""
    p, q = alpha.numerator, alpha.denominator
    return from_weights([p**j * q ** (k - 1 - j) for j in range(k)])


@dataclass(frozen=True)
class ConstructionTrace:
    h: int
    tail_bound: Fraction
    h_bound: Fraction
    h_branch: str
    alpha_min: Fraction
    alpha: Fraction
    theta: Optional[Fraction]
    k: int
    catalyst: ProbVec
    p_before: Fraction
    p_after: Fraction

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "tail_bound": str(self.tail_bound),
            "h_bound": str(self.h_bound),
            "h_branch": self.h_branch,
            "alpha_min": str(self.alpha_min),
            "alpha": str(self.alpha),
            "theta": None if self.theta is None else str(self.theta),
            "k": self.k,
            "catalyst": self.catalyst.to_strings(),
            "p_before": str(self.p_before),
            "p_after": str(self.p_after),
        }


def construct_catalyst(
    pair: TransformPair,
    theta: Fraction = Fraction(1, 1000),
    alpha: Optional[Fraction] = None,
) -> ConstructionTrace:
    """Build and verify a geometric catalyst that strictly raises P.

    The ratio is ``alpha_min + theta * (1 - alpha_min)``; passing ``alpha``
    pins it directly (it must still lie in ``(alpha_min, 1)``).
    """
    bounds = alpha_bound_terms(pair)
    amin = bounds.alpha_min
    if alpha is None:
        theta = Fraction(theta)
        if not 0 < theta < 1:
            raise ValueError(f"theta must lie in (0, 1), got {theta}")
        alpha = amin + theta * (1 - amin)
    else:
        alpha = Fraction(alpha)
        theta = None
        if not amin < alpha < 1:
            raise ValueError(f"alpha must lie in ({amin}, 1), got {alpha}")

    k = geometric_length(pair.x.at(pair.n), pair.x.at(bounds.h), alpha)
    c = geometric_catalyst(alpha, k)
    wx, dx = tensor_weights(pair.x, c)
    wy, dy = tensor_weights(pair.y, c)
    p_after = max_prob_weights(wx, dx, wy, dy)
    if not p_after > pair.p:
        raise ConstructionError(
            f"catalyst with alpha={alpha}, k={k} gives {p_after}, not above {pair.p}"
        )
    return ConstructionTrace(
        h=bounds.h,
        tail_bound=bounds.tail_bound,
        h_bound=bounds.h_bound,
        h_branch=bounds.h_branch,
        alpha_min=amin,
        alpha=alpha,
        theta=theta,
        k=k,
        catalyst=c,
        p_before=pair.p,
        p_after=p_after,
    )
