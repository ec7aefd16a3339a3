"""Integer smoothness criterion for a general pencil X = D1 n D2.

Each smooth parameter tuple falls in exactly one of 25 cases, grouped by
the base locus of |D1|: case 1 (empty), 2a-2e (Y5), 3a-3m (Y4) and
4a-4f (Y3).  Every case is a conjunction of linear (in)equalities in
(d1, ..., d4, b1, b2), a few with a trailing two-atom disjunction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .scroll import BaseLocus, ScrollParams, base_locus


class CaseId(str, enum.Enum):
    C1 = "1"
    C2a = "2a"
    C2b = "2b"
    C2c = "2c"
    C2d = "2d"
    C2e = "2e"
    C3a = "3a"
    C3b = "3b"
    C3c = "3c"
    C3d = "3d"
    C3e = "3e"
    C3f = "3f"
    C3g = "3g"
    C3h = "3h"
    C3i = "3i"
    C3j = "3j"
    C3k = "3k"
    C3l = "3l"
    C3m = "3m"
    C4a = "4a"
    C4b = "4b"
    C4c = "4c"
    C4d = "4d"
    C4e = "4e"
    C4f = "4f"

    def __str__(self):
        return self.value

    @property
    def stratum(self) -> BaseLocus:
        return (BaseLocus.EMPTY, BaseLocus.Y5, BaseLocus.Y4, BaseLocus.Y3)[int(self.value[0]) - 1]

    @classmethod
    def parse(cls, tag: str) -> CaseId:
        return cls(str(tag).strip().lower())


class SingularReason(str, enum.Enum):
    BASE_LOCUS_TOO_LARGE = "BaseLocusTooLarge"
    NO_CASE_MATCHES = "NoCaseMatches"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    smooth: bool
    case: CaseId | None = None
    reason: SingularReason | None = None

    def __str__(self):
        if self.smooth:
            return f"Smooth{{{self.case}}}"
        return f"Singular{{{self.reason}}}"


def _stratum_conditions(d1, d2, d3, d4, b1):
    return (
        b1 >= 0,
        b1 < 0 and 2 * d4 + b1 >= 0,
        2 * d4 + b1 < 0 and 2 * d3 + b1 >= 0,
        2 * d3 + b1 < 0 and 2 * d2 + b1 >= 0,
    )


def _case_predicates(strict_3j: bool, literal_3kl: bool) -> dict[CaseId, Callable[..., bool]]:
    # argument order: d1, d2, d3, d4, b1, b2; stratum condition checked separately
    def tail(d2, d3, b2):
        return d3 + b2 >= 0 or d2 + b2 == 0

    # The printed 3k/3l carry d3 + d4 + b1 >= 0.  With d2 + b1 >= 0 and
    # d3 + d4 + b1 < 0 the Y4 analysis has no branch; there D1 only has
    # isolated singular points off Y5, harmless unless Bs|D2| = Y4, so the
    # same remaining conditions decide smoothness.  Dropped by default.
    if literal_3kl:
        def kl(d3, d4, b1):
            return d3 + d4 + b1 >= 0
    else:
        def kl(d3, d4, b1):
            return True

    if strict_3j:
        def c3j(d1, d2, d3, d4, b1, b2):
            return (d3 + d4 >= d1 and b1 == -d1 and b2 < 0 and 2 * d4 + b2 >= 0
                    and d3 + b2 >= 0 and d2 + b2 == 0)
    else:
        # d2 + b1 < 0 is the standing assumption of this branch of the
        # Y4 analysis; without it the disjunction overlaps case 3l
        def c3j(d1, d2, d3, d4, b1, b2):
            return (d3 + d4 >= d1 and d2 + b1 < 0 and b1 == -d1 and b2 < 0
                    and 2 * d4 + b2 >= 0 and tail(d2, d3, b2))

    C = CaseId
    return {
        C.C1: lambda d1, d2, d3, d4, b1, b2: True,
        C.C2a: lambda d1, d2, d3, d4, b1, b2: d1 + b1 < 0 and b2 == 0,
        C.C2b: lambda d1, d2, d3, d4, b1, b2: d1 + b1 >= 0 and b2 >= 0,
        C.C2c: lambda d1, d2, d3, d4, b1, b2: b1 == -d1 and b2 < 0 and d3 + b2 >= 0,
        C.C2d: lambda d1, d2, d3, d4, b1, b2: b1 == -d1 and b2 == -d2 and d2 > d3,
        C.C2e: lambda d1, d2, d3, d4, b1, b2: (
            d1 + b1 > 0 and d2 + b1 >= 0 and b2 < 0 and d3 + b2 >= 0),
        C.C3a: lambda d1, d2, d3, d4, b1, b2: (
            d1 > d2 and d4 > 0 and b1 == -(d1 + d4) and b2 == 0),
        C.C3b: lambda d1, d2, d3, d4, b1, b2: (
            d1 > d2 and d4 == 0 and b1 == -d1 and b2 == 0),
        C.C3c: lambda d1, d2, d3, d4, b1, b2: (
            d1 > d2 + d4 and d4 > 0 and b1 == -d1 and b2 == -2 * d4 and tail(d2, d3, b2)),
        C.C3d: lambda d1, d2, d3, d4, b1, b2: (
            d1 + b1 < 0 and d2 + d4 + b1 >= 0 and b2 == 0),
        C.C3e: lambda d1, d2, d3, d4, b1, b2: (
            d1 + b1 >= 0 and d2 + d4 + b1 >= 0 and d2 + b1 < 0
            and d3 + d4 + b1 < 0 and b2 >= 0),
        C.C3f: lambda d1, d2, d3, d4, b1, b2: (
            d1 > d2 and d1 > d3 + d4 and d2 + d4 > d1 and b1 == -d1 and b2 < 0
            and 2 * d4 + b2 >= 0 and tail(d2, d3, b2)),
        C.C3g: lambda d1, d2, d3, d4, b1, b2: (
            d1 == d2 + d4 and d2 > d3 and d4 > 0 and b1 == -d1 and b2 < 0
            and 2 * d4 + b2 >= 0 and tail(d2, d3, b2)),
        C.C3h: lambda d1, d2, d3, d4, b1, b2: (
            d1 == d2 + d4 and d2 == d3 + d4 and d4 > 0 and b1 == -d1 and b2 == -d2),
        C.C3i: lambda d1, d2, d3, d4, b1, b2: (
            d1 + b1 >= 0 and d3 + d4 + b1 >= 0 and d2 + b1 < 0 and b2 >= 0),
        C.C3j: c3j,
        C.C3k: lambda d1, d2, d3, d4, b1, b2: (
            d2 + b1 >= 0 and kl(d3, d4, b1) and b2 >= 0),
        C.C3l: lambda d1, d2, d3, d4, b1, b2: (
            d2 + b1 >= 0 and kl(d3, d4, b1) and b2 < 0 and 2 * d4 + b2 >= 0
            and d3 + b2 >= 0),
        C.C3m: lambda d1, d2, d3, d4, b1, b2: (
            d1 == d2 == d3 > 0 and d4 == 0 and b1 == b2 == -d1),
        C.C4a: lambda d1, d2, d3, d4, b1, b2: (
            d1 + d4 == d2 + d3 and d3 > d4 > 0 and b1 == -(d1 + d4) and b2 == 0),
        C.C4b: lambda d1, d2, d3, d4, b1, b2: (
            d1 == d2 > d3 == d4 > 0 and b1 == -(d1 + d4) and b2 == 0),
        C.C4c: lambda d1, d2, d3, d4, b1, b2: (
            d1 == d2 + d3 and d3 > d4 > 0 and b1 == -d1 and b2 == -2 * d4
            and tail(d2, d3, b2)),
        C.C4d: lambda d1, d2, d3, d4, b1, b2: (
            d1 == d2 + d3 and d3 > d4 == 0 and b1 == -d1 and b2 == 0),
        C.C4e: lambda d1, d2, d3, d4, b1, b2: (
            d1 == d2 and d3 == d4 == 0 and b1 == -d1 and b2 == 0),
        C.C4f: lambda d1, d2, d3, d4, b1, b2: (
            d4 > 0 and d3 == d4 and d2 == 2 * d4 and d1 == 3 * d4
            and b1 == -3 * d4 and b2 == -2 * d4),
    }


_PREDICATES = {
    (strict, literal): _case_predicates(strict, literal)
    for strict in (False, True) for literal in (False, True)
}
_BY_STRATUM = {
    s: [c for c in CaseId if c.stratum is s]
    for s in (BaseLocus.EMPTY, BaseLocus.Y5, BaseLocus.Y4, BaseLocus.Y3)
}


def case_holds(case: CaseId, p: ScrollParams, strict_3j: bool = False,
               literal_3kl: bool = False) -> bool:
    """Evaluate one case's full condition set, stratum condition included.

    ``strict_3j`` reads the tail of 3j as a conjunction; ``literal_3kl``
    keeps the printed d3 + d4 + b1 >= 0 in 3k and 3l.
    """
    d1, d2, d3, d4 = p.d
    outer = _stratum_conditions(d1, d2, d3, d4, p.b1)
    if not outer[int(case.value[0]) - 1]:
        return False
    return bool(_PREDICATES[strict_3j, literal_3kl][case](d1, d2, d3, d4, p.b1, p.b2))


def matching_cases(p: ScrollParams, strict_3j: bool = False,
                   literal_3kl: bool = False) -> list[CaseId]:
    """All cases whose conditions hold, each tested independently."""
    return [c for c in CaseId if case_holds(c, p, strict_3j, literal_3kl)]


def classify(p: ScrollParams, strict_3j: bool = False,
             literal_3kl: bool = False) -> Classification:
    stratum = base_locus(p, p.b1)
    if stratum is BaseLocus.TOO_LARGE:
        return Classification(False, reason=SingularReason.BASE_LOCUS_TOO_LARGE)
    d1, d2, d3, d4 = p.d
    preds = _PREDICATES[strict_3j, literal_3kl]
    for case in _BY_STRATUM[stratum]:
        if preds[case](d1, d2, d3, d4, p.b1, p.b2):
            return Classification(True, case=case)
    return Classification(False, reason=SingularReason.NO_CASE_MATCHES)


def dstar4_holds(p: ScrollParams) -> bool:
    """No common zero of the 2x2 minors of the Y4 gradient matrix."""
    d1, d2, d3, d4 = p.d
    return p.b1 == -d1 and d1 == d2 + d4 and p.b2 == -d2 and d2 == d3 + d4


def dstar5_holds(p: ScrollParams) -> bool:
    """No common zero of the 2x2 minors of the Y5 gradient matrix."""
    d1, d2, d3, _ = p.d
    b1, b2 = p.b
    if d1 + b1 >= 0 and d3 + b2 >= 0:
        return True
    return d1 + b1 == 0 and d2 + b2 == 0 and (d1 + b2 == 0 or d2 + b1 < 0)


@dataclass(frozen=True)
class IntersectionNumbers:
    c12c13: int
    ab: int
    a1a2d2: int


def intersection_numbers(p: ScrollParams) -> IntersectionNumbers:
    """Closed-form intersection counts used by the Y4 and Y3 arguments.

    ``c12c13``: two minor curves C12, C13 on Y4; ``ab``: the curves
    A = {a14 x4 + a15 x5 = 0} and B = {b14 x4 + b15 x5 = 0} on Y4;
    ``a1a2d2``: the triple product A1 A2 D2 on Y3.
    """
    d1, d2, d3, d4 = p.d
    b1, b2 = p.b
    return IntersectionNumbers(
        c12c13=4 * (d1 + d4 + b1 + b2) + 2 * (d2 + d3),
        ab=2 * d1 + d4 + b1 + b2,
        a1a2d2=2 * (d1 + d2 + d3 + d4) + 4 * b1 + b2,
    )
