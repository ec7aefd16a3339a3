"""Parameters of a pencil of fiberwise quadrics in a 5-fold scroll.

The ambient variety is F(d1, ..., d5) = P(O(d1) + ... + O(d5)) over P^1
with d1 >= ... >= d5 = 0.  A fiberwise quadric of class 2M + bL is
f = sum_{i <= j} a_ij(t0, t1) x_i x_j with deg a_ij = d_i + d_j + b.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence


class InvalidParameters(ValueError):
    """Raised for tuples that do not define a pencil of fiberwise quadrics."""


@dataclass(frozen=True, order=True)
class ScrollParams:
    """Canonical parameters ``d = (d1, d2, d3, d4)`` (``d5 = 0``) and ``b1 <= b2``."""

    d: tuple[int, int, int, int]
    b1: int
    b2: int

    def __post_init__(self):
        d = tuple(int(x) for x in self.d)
        if len(d) != 4:
            raise InvalidParameters(f"expected four twisting degrees, got {self.d!r}")
        object.__setattr__(self, "d", d)
        if list(d) != sorted(d, reverse=True) or d[3] < 0:
            raise InvalidParameters(f"degrees must satisfy d1 >= d2 >= d3 >= d4 >= 0, got {d}")
        if self.b1 > self.b2:
            raise InvalidParameters(f"need b1 <= b2, got b1={self.b1}, b2={self.b2}")
        if 2 * d[0] + self.b1 < 0:
            raise InvalidParameters(
                f"|2M + {self.b1}L| is empty on F{self.degrees}: 2*d1 + b1 = {2 * d[0] + self.b1} < 0"
            )

    @property
    def degrees(self) -> tuple[int, int, int, int, int]:
        """All five twisting degrees, including ``d5 = 0``."""
        return self.d + (0,)

    @property
    def b(self) -> tuple[int, int]:
        return (self.b1, self.b2)

    def __str__(self):
        d = ",".join(map(str, self.d))
        return f"({d}; {self.b1},{self.b2})"

    def as_dict(self) -> dict:
        return {"d": list(self.d), "b1": self.b1, "b2": self.b2}


def canonicalize(d: Sequence[int], b1: int, b2: int) -> ScrollParams:
    """Normalize raw scroll data to canonical :class:`ScrollParams`.

    ``d`` may hold four degrees (``d5 = 0`` implied) or all five, in any
    order.  The scroll is defined up to a common twist: subtracting c from
    every d_i maps M to M - cL, so the classes 2M + b_jL become
    2M + (b_j + 2c)L.

    >>> canonicalize((1, 1, 1, 1, 1), -2, -1)
    ScrollParams(d=(0, 0, 0, 0), b1=0, b2=1)
    """
    d = [int(x) for x in d]
    if len(d) == 4:
        d.append(0)
    if len(d) != 5:
        raise InvalidParameters(f"expected 4 or 5 twisting degrees, got {len(d)}")
    c = min(d)
    d = sorted((x - c for x in d), reverse=True)
    b1, b2 = int(b1) + 2 * c, int(b2) + 2 * c
    if b1 > b2:
        b1, b2 = b2, b1
    return ScrollParams(tuple(d[:4]), b1, b2)


@dataclass(frozen=True)
class DivisorClass:
    """The class ``m_coeff * M + l_coeff * L`` on a scroll."""

    m_coeff: int
    l_coeff: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.m_coeff + other.m_coeff, self.l_coeff + other.l_coeff)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.m_coeff - other.m_coeff, self.l_coeff - other.l_coeff)

    def __rmul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.m_coeff, k * self.l_coeff)

    def __str__(self):
        return f"{self.m_coeff}M{self.l_coeff:+d}L"


M = DivisorClass(1, 0)
L = DivisorClass(0, 1)


def quadric_class(b: int) -> DivisorClass:
    return DivisorClass(2, b)


def intersection_number(degrees: Sequence[int], classes: Sequence[DivisorClass]) -> int:
    """Top intersection of divisor classes on the scroll F(degrees).

    On F(e_1, ..., e_r) (dimension r) the ring relations are L^2 = 0,
    M^(r-1) L = 1 and M^r = sum(e_i).
    """
    r = len(degrees)
    if len(classes) != r:
        raise ValueError(f"need {r} classes on a scroll of dimension {r}, got {len(classes)}")
    # expand prod (m_i M + l_i L) keeping terms with at most one L
    m_only = 1
    one_l = 0
    for c in classes:
        m_only, one_l = m_only * c.m_coeff, one_l * c.m_coeff + m_only * c.l_coeff
    return m_only * sum(degrees) + one_l


class BaseLocus(enum.IntEnum):
    """Base locus of |2M + bL|, ordered by inclusion."""

    EMPTY = 0
    Y5 = 1
    Y4 = 2
    Y3 = 3
    TOO_LARGE = 4

    @property
    def first_free(self) -> int:
        """1-based index k with the locus equal to Y_k = {x_1 = ... = x_{k-1} = 0}.

        EMPTY maps to 6; TOO_LARGE maps to 2 (the locus contains Y_2).
        """
        return 6 - int(self)

    def __str__(self):
        return {0: "empty", 1: "Y5", 2: "Y4", 3: "Y3", 4: "too large"}[int(self)]


def base_locus(p: ScrollParams, b: int) -> BaseLocus:
    d1, d2, d3, d4 = p.d
    if b >= 0:
        return BaseLocus.EMPTY
    if 2 * d4 + b >= 0:
        return BaseLocus.Y5
    if 2 * d3 + b >= 0:
        return BaseLocus.Y4
    if 2 * d2 + b >= 0:
        return BaseLocus.Y3
    return BaseLocus.TOO_LARGE


@dataclass(frozen=True)
class CoeffDegreeMatrix:
    """Degrees of the coefficient forms a_ij; negative means identically zero."""

    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        """1-based lookup, matching the coordinate indices x_1..x_5."""
        return self.rows[i - 1][j - 1]

    def vanishes(self, i: int, j: int) -> bool:
        return self.entry(i, j) < 0


def coeff_degrees(p: ScrollParams, b: int) -> CoeffDegreeMatrix:
    d = p.degrees
    return CoeffDegreeMatrix(tuple(tuple(d[i] + d[j] + b for j in range(5)) for i in range(5)))


def euler_characteristic(p: ScrollParams) -> int:
    return -16 * sum(p.d) - 20 * p.b1 - 20 * p.b2 + 16


RATIONAL_CHI = frozenset({0, -8, -4})


@dataclass(frozen=True)
class RationalityVerdict:
    rational: bool
    chi: int

    @property
    def verdict(self) -> str:
        return "Rational" if self.rational else "Nonrational"


def rationality_verdict(p: ScrollParams) -> RationalityVerdict:
    """Verdict for a smooth standard fibration with these parameters.

    chi in {0, -8} is rational by the known degree 4 results, chi = -4
    is rational by the classification of the chi = -4 families, anything
    else is nonrational.  Smoothness and standardness are not checked here.
    """
    chi = euler_characteristic(p)
    return RationalityVerdict(chi in RATIONAL_CHI, chi)


def iter_degrees(d1_max: int) -> Iterable[tuple[int, int, int, int]]:
    """All canonical (d1, d2, d3, d4) with d1 <= d1_max, in lexicographic order."""
    for d1 in range(d1_max + 1):
        for d2 in range(d1 + 1):
            for d3 in range(d2 + 1):
                for d4 in range(d3 + 1):
                    yield (d1, d2, d3, d4)


def iter_params(d1_max: int, b_min: int, b_max: int) -> Iterable[ScrollParams]:
    """Every valid canonical tuple in the box, lexicographic in (d, b1, b2)."""
    for d in iter_degrees(d1_max):
        for b1 in range(max(b_min, -2 * d[0]), b_max + 1):
            for b2 in range(b1, b_max + 1):
                yield ScrollParams(d, b1, b2)


def upper_pairs(n: int = 5) -> list[tuple[int, int]]:
    """Index pairs (i, j), 0 <= i <= j < n, in row-major order."""
    return list(combinations_with_replacement(range(n), 2))
