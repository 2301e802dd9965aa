"""Agreement campaigns: theorem predictions against the brute-force oracle.

Each row carries both verdicts; a campaign is healthy iff every row agrees.
"""

from __future__ import annotations

import csv
import io
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .catalyst2d import is_useful_2d
from .catalystnd import construct_catalyst, exists_catalyst
from .oracle import (
    FLOAT_RTOL,
    catalyzed_prob,
    catalyzed_prob_float,
    qubit_catalyst,
    random_pair,
    search_catalyst,
    useful_float,
)
from .probvec import ProbVec
from .vidal import TransformPair, catalysis_admissible

CSV_COLUMNS = ("pair_id", "catalyst", "p_before", "p_after", "useful_oracle", "useful_theorem", "agree")


@dataclass(frozen=True)
class SweepRow:
    pair_id: int
    catalyst: str
    p_before: str
    p_after: str
    useful_oracle: bool
    useful_theorem: bool

    @property
    def agree(self) -> bool:
        return self.useful_oracle == self.useful_theorem

    def as_dict(self) -> dict:
        d = asdict(self)
        d["agree"] = self.agree
        return d


def _fmt_vec(c: ProbVec) -> str:
    return ",".join(c.to_strings())


def _oracle(pair: TransformPair, c: ProbVec, mode: str) -> tuple[str, str, bool]:
    if mode == "float":
        before, after, useful = useful_float(
            [float(a) for a in pair.x], [float(a) for a in pair.y], [float(a) for a in c]
        )
        return repr(before), repr(after), useful
    after = catalyzed_prob(pair.x, pair.y, c)
    return str(pair.p), str(after), after > pair.p


def sweep_grid(pair: TransformPair, resolution: int, mode: str = "exact", pair_id: int = 0) -> list[SweepRow]:
    """Qubit catalysts at t = i/resolution, oracle vs the 2D criterion."""
    rows = []
    for i in range(1, resolution):
        c = qubit_catalyst(Fraction(i, resolution))
        before, after, useful = _oracle(pair, c, mode)
        rows.append(SweepRow(pair_id, _fmt_vec(c), before, after, useful, is_useful_2d(pair, c)))
    return rows


def existence_row(pair: TransformPair, dmax: int, search_resolution: int, mode: str = "exact",
                  pair_id: int = 0, theta: Fraction = Fraction(1, 1000)) -> SweepRow:
    """One row checking the any-dimension existence claim.

    If a catalyst is predicted, the constructed one is re-evaluated by the
    oracle; otherwise a bounded grid search must come back empty.
    """
    predicted = exists_catalyst(pair)
    if predicted:
        # construct_catalyst raises ConstructionError itself on failure
        trace = construct_catalyst(pair, theta=theta)
        label = f"geometric(alpha={trace.alpha},k={trace.k})"
        if mode == "float":
            after = catalyzed_prob_float([float(a) for a in pair.x], [float(a) for a in pair.y],
                                         [float(a) for a in trace.catalyst])
            before = float(pair.p)
            return SweepRow(pair_id, label, repr(before), repr(after),
                            after > before * (1 + FLOAT_RTOL), True)
        after = catalyzed_prob(pair.x, pair.y, trace.catalyst)
        return SweepRow(pair_id, label, str(pair.p), str(after), after > pair.p, True)
    found = search_catalyst(pair, dmax, search_resolution)
    if found is None:
        return SweepRow(pair_id, f"search(dmax={dmax},res={search_resolution})", str(pair.p), str(pair.p),
                        False, False)
    return SweepRow(pair_id, _fmt_vec(found.catalyst), str(found.p_before), str(found.p_after), True, False)


def _pair_job(args) -> list[SweepRow]:
    pair, pair_id, resolution, dmax, search_resolution, mode = args
    rows = sweep_grid(pair, resolution, mode, pair_id) if catalysis_admissible(pair) else []
    rows.append(existence_row(pair, dmax, search_resolution, mode, pair_id))
    return rows


def sweep_random(
    seed: int,
    pairs: int,
    resolution: int = 50,
    dmax: int = 4,
    search_resolution: int = 20,
    mode: str = "exact",
    admissible: Optional[bool] = True,
    dims=(3, 4, 5),
    workers: int = 1,
) -> list[SweepRow]:
    """Random-pair campaign; output order depends only on the seed."""
    rng = random.Random(seed)
    drawn = [random_pair(rng, dims=dims, admissible=admissible) for _ in range(pairs)]
    jobs = [(p, i, resolution, dmax, search_resolution, mode) for i, p in enumerate(drawn)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunks = list(ex.map(_pair_job, jobs))
    else:
        chunks = [_pair_job(j) for j in jobs]
    return [row for chunk in chunks for row in chunk]


def rows_to_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.as_dict())
    return buf.getvalue()
