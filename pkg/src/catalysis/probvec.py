"""Exact probability vectors (Schmidt coefficient spectra).

Vectors are stored as tuples of :class:`fractions.Fraction`, sorted
nonincreasingly.  Public indexing is 1-based (``v.at(1)`` is the largest
component) so that formulas read the same as in the literature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Rat = Fraction
RatLike = Union[Rational, str, float]


class ProbVecError(ValueError):
    """Raised for malformed vector input."""


def to_rat(value: RatLike) -> Fraction:
    """Convert ``value`` to an exact rational.

    Strings may be decimals (``"0.801"``) or fractions (``"1/4"``); floats go
    through their shortest repr so that ``0.1`` becomes ``1/10``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ProbVecError(f"not a number: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ProbVecError(f"not a finite number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = "".join(value.split())
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ProbVecError(f"cannot parse {value!r} as a rational") from exc
    raise ProbVecError(f"unsupported entry type {type(value).__name__}")


def parse_vector(text: str) -> list[Fraction]:
    """Parse a literal like ``"0.6, 0.2, 1/5"``; whitespace is ignored."""
    text = "".join(text.split())
    if not text:
        raise ProbVecError("empty vector literal")
    return [to_rat(tok) for tok in text.split(",")]


@dataclass(frozen=True)
class ProbVec:
    components: tuple[Fraction, ...]

    def __post_init__(self):
        comps = self.components
        if not comps:
            raise ProbVecError("probability vector must be nonempty")
        for i, a in enumerate(comps, start=1):
            if not isinstance(a, Fraction):
                raise ProbVecError(f"component {i} is not a Fraction")
            if a < 0:
                raise ProbVecError(f"component {i} is negative: {a}")
        for i in range(len(comps) - 1):
            if comps[i] < comps[i + 1]:
                raise ProbVecError(
                    f"components not sorted nonincreasingly at index {i + 1}"
                )
        if sum(comps) != 1:
            raise ProbVecError(f"components sum to {sum(comps)}, not 1")

    @classmethod
    def _trusted(cls, components: tuple[Fraction, ...]) -> "ProbVec":
        # caller guarantees the invariants (used for products of valid vectors)
        obj = object.__new__(cls)
        object.__setattr__(obj, "components", components)
        return obj

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    @property
    def n(self) -> int:
        return len(self.components)

    def at(self, i: int) -> Fraction:
        """Component ``i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} outside 1..{self.n}")
        return self.components[i - 1]

    @property
    def is_positive(self) -> bool:
        return self.components[-1] > 0

    @property
    def rank(self) -> int:
        """Number of nonzero components (the Schmidt number)."""
        return sum(1 for a in self.components if a > 0)

    def padded(self, n: int) -> "ProbVec":
        if n < self.n:
            raise ProbVecError(f"cannot pad length {self.n} down to {n}")
        return ProbVec(self.components + (Fraction(0),) * (n - self.n))

    def to_strings(self) -> list[str]:
        return [str(a) for a in self.components]

    def __str__(self) -> str:
        return "(" + ", ".join(self.to_strings()) + ")"


def make_probvec(raw: Iterable[RatLike], normalize: bool = False) -> ProbVec:
    """Build a sorted :class:`ProbVec` from arbitrary-order entries.

    With ``normalize`` the entries are divided by their sum, otherwise they
    must already sum to exactly 1.
    """
    vals = [to_rat(v) for v in raw]
    if not vals:
        raise ProbVecError("probability vector must be nonempty")
    for i, v in enumerate(vals, start=1):
        if v < 0:
            raise ProbVecError(f"entry {i} is negative: {v}")
    total = sum(vals)
    if total == 0:
        raise ProbVecError("entries sum to zero")
    if normalize:
        vals = [v / total for v in vals]
    elif total != 1:
        raise ProbVecError(f"entries sum to {total}, not 1")
    return ProbVec(tuple(sorted(vals, reverse=True)))


def from_weights(weights: Sequence[int]) -> ProbVec:
    """Normalize nonnegative integer weights into a sorted ProbVec."""
    total = sum(weights)
    if total <= 0 or any(w < 0 for w in weights):
        raise ProbVecError("weights must be nonnegative with a positive sum")
    return ProbVec(tuple(sorted((Fraction(w, total) for w in weights), reverse=True)))


def integer_weights(v: ProbVec) -> tuple[list[int], int]:
    """Integers w and a common denominator d with v_i = w_i / d."""
    den = math.lcm(*(c.denominator for c in v.components))
    return [c.numerator * (den // c.denominator) for c in v.components], den


def tensor_weights(a: ProbVec, b: ProbVec) -> tuple[list[int], int]:
    """Sorted integer weights and denominator of a ⊗ b."""
    # integer sort is far cheaper than comparing Fractions with large denominators
    wa, da = integer_weights(a)
    wb, db = integer_weights(b)
    return sorted((i * j for i in wa for j in wb), reverse=True), da * db


def tensor(a: ProbVec, b: ProbVec) -> ProbVec:
    """Sorted spectrum of the tensor product a ⊗ b."""
    w, den = tensor_weights(a, b)
    return ProbVec._trusted(tuple(Fraction(x, den) for x in w))


@dataclass(frozen=True)
class TailSums:
    """Tail sums ``E_l = a_l + ... + a_n`` for l = 1..n (1-based via ``E``)."""

    values: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def E(self, l: int) -> Fraction:
        # E_{n+1} is the empty sum
        if l == self.n + 1:
            return Fraction(0)
        if not 1 <= l <= self.n:
            raise IndexError(f"tail index {l} outside 1..{self.n + 1}")
        return self.values[l - 1]


def tail_sums(a: ProbVec) -> TailSums:
    acc = Fraction(0)
    out = []
    for comp in reversed(a.components):
        acc += comp
        out.append(acc)
    out.reverse()
    return TailSums(tuple(out))


def majorized_by(a: ProbVec, b: ProbVec) -> bool:
    """True iff a ≺ b, i.e. every prefix sum of a is at most that of b."""
    if a.n != b.n:
        raise ProbVecError(f"length mismatch: {a.n} vs {b.n}")
    sa = sb = Fraction(0)
    for ai, bi in zip(a.components[:-1], b.components[:-1]):
        sa += ai
        sb += bi
        if sa > sb:
            return False
    return True


def common_dimension(x: ProbVec, y: ProbVec) -> tuple[ProbVec, ProbVec]:
    """Zero-pad to a common length, then drop trailing zeros shared by both."""
    n = max(x.n, y.n)
    xc = list(x.padded(n).components)
    yc = list(y.padded(n).components)
    while len(xc) > 1 and xc[-1] == 0 and yc[-1] == 0:
        xc.pop()
        yc.pop()
    return ProbVec(tuple(xc)), ProbVec(tuple(yc))
