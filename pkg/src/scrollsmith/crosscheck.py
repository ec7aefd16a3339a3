"""Sweep comparing the closed-form criterion with the sampling oracle."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .criterion import classify
from .oracle import DEFAULT_PRIME, NonGeneric, OracleVerdict, derive_seed, oracle_smooth
from .scroll import ScrollParams, iter_params


@dataclass(frozen=True)
class Disagreement:
    params: ScrollParams
    criterion: str
    oracle: OracleVerdict

    def as_dict(self) -> dict:
        return {"params": self.params.as_dict(), "criterion": self.criterion,
                "oracle": self.oracle.as_dict()}


@dataclass
class CrosscheckReport:
    total: int = 0
    smooth: int = 0
    disagreements: list = field(default_factory=list)
    nongeneric: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.disagreements

    @property
    def nongeneric_rate(self) -> float:
        return len(self.nongeneric) / self.total if self.total else 0.0

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "smooth": self.smooth,
            "disagreements": [d.as_dict() for d in self.disagreements],
            "nongeneric": [p.as_dict() for p in self.nongeneric],
            "elapsed": round(self.elapsed, 3),
        }


def crosscheck_box(d1_max: int, b_min: Optional[int] = None, b_max: Optional[int] = None) -> Iterable[ScrollParams]:
    """Default box: b1, b2 in [-2*d1_max, d1_max]."""
    lo = -2 * d1_max if b_min is None else b_min
    hi = d1_max if b_max is None else b_max
    return iter_params(d1_max, lo, hi)


def crosscheck(params: Iterable[ScrollParams], trials: int = 5, prime: int = DEFAULT_PRIME,
               seed: int = 0, strict_3j: bool = False, literal_3kl: bool = False,
               progress: Optional[Callable[[int], None]] = None) -> CrosscheckReport:
    """Each tuple gets its own derived seed, so the report does not depend
    on iteration order."""
    rep = CrosscheckReport()
    start = time.perf_counter()
    for p in params:
        rep.total += 1
        c = classify(p, strict_3j, literal_3kl)
        rep.smooth += c.smooth
        try:
            v = oracle_smooth(p, trials, prime, derive_seed(seed, *p.d, p.b1, p.b2), locate=False)
        except NonGeneric:
            rep.nongeneric.append(p)
            continue
        if v.smooth_capable != c.smooth:
            rep.disagreements.append(Disagreement(p, str(c), v))
        if progress:
            progress(rep.total)
    rep.elapsed = time.perf_counter() - start
    return rep
