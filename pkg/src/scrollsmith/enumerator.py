"""Bounded search of the parameter lattice.

For a fixed Euler characteristic the relation -16*sum(d) - 20*(b1 + b2) + 16
= chi pins b1 + b2 once d is chosen, so the search runs over d and a
single b1 range per d.
"""

from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass
from typing import Iterable

from .criterion import CaseId, classify
from .scroll import (
    BaseLocus,
    RationalityVerdict,
    ScrollParams,
    base_locus,
    euler_characteristic,
    iter_degrees,
    iter_params,
    rationality_verdict,
)


class BoundaryWarning(UserWarning):
    """The search box may be truncating the answer."""


@dataclass(frozen=True)
class SearchBounds:
    d1_max: int = 16
    b_min: int | None = None
    b_max: int | None = None

    def __post_init__(self):
        if self.d1_max < 0:
            raise ValueError(f"d1_max must be non-negative, got {self.d1_max}")
        if self.b_min is None:
            object.__setattr__(self, "b_min", -2 * self.d1_max)
        if self.b_max is None:
            object.__setattr__(self, "b_max", 2 * self.d1_max)
        if self.b_min > self.b_max:
            raise ValueError(f"empty b range [{self.b_min}, {self.b_max}]")

    def params(self) -> Iterable[ScrollParams]:
        return iter_params(self.d1_max, self.b_min, self.b_max)


def is_standard(p: ScrollParams) -> bool:
    """False when Y4 lies in both base loci (relative Picard number >= 2)."""
    return base_locus(p, p.b2) not in (BaseLocus.Y4, BaseLocus.Y3)


@dataclass(frozen=True)
class FamilyRecord:
    params: ScrollParams
    case: CaseId
    chi: int
    standard: bool
    rationality: RationalityVerdict

    @property
    def rational(self) -> bool:
        return self.rationality.rational

    def as_dict(self) -> dict:
        return {
            "d": list(self.params.d),
            "b1": self.params.b1,
            "b2": self.params.b2,
            "case": self.case.value,
            "chi": self.chi,
            "standard": self.standard,
            "rational": self.rational,
        }


def make_record(p: ScrollParams, strict_3j: bool = False,
                literal_3kl: bool = False) -> FamilyRecord | None:
    c = classify(p, strict_3j, literal_3kl)
    if not c.smooth:
        return None
    return FamilyRecord(p, c.case, euler_characteristic(p), is_standard(p), rationality_verdict(p))


def enumerate_by_chi(chi: int, bounds: SearchBounds | None = None, standard_only: bool = False,
                     strict_3j: bool = False, literal_3kl: bool = False) -> list[FamilyRecord]:
    """Every smooth canonical tuple in the box with the given chi, sorted.

    Emits BoundaryWarning when a record sits on a face of the box or when
    the b bounds cut off tuples that satisfy the chi relation.
    """
    bounds = bounds or SearchBounds()
    out: list[FamilyRecord] = []
    clipped = 0
    for d in iter_degrees(bounds.d1_max):
        num = 16 - chi - 16 * sum(d)
        if num % 20:
            continue
        s = num // 20  # b1 + b2
        # b1 >= -2*d2 (else TooLarge, never smooth) and b1 <= b2 = s - b1
        lo = max(-2 * d[1], -2 * d[0])
        hi = s // 2
        for b1 in range(lo, hi + 1):
            b2 = s - b1
            if b1 < bounds.b_min or b2 > bounds.b_max:
                clipped += 1
                continue
            rec = make_record(ScrollParams(d, b1, b2), strict_3j, literal_3kl)
            if rec is None:
                continue
            if standard_only and not rec.standard:
                continue
            out.append(rec)
    out.sort(key=lambda r: r.params)
    faces = [r for r in out if r.params.d[0] == bounds.d1_max
             or r.params.b1 == bounds.b_min or r.params.b2 == bounds.b_max]
    if clipped:
        warnings.warn(BoundaryWarning(
            f"{clipped} tuples with chi={chi} lie outside b in [{bounds.b_min}, {bounds.b_max}]"),
            stacklevel=2)
    if faces:
        warnings.warn(BoundaryWarning(
            f"{len(faces)} records touch the search box faces; raise the bounds to confirm"),
            stacklevel=2)
    return out


def realizability_sweep(bounds: SearchBounds | None = None, strict_3j: bool = False,
                        literal_3kl: bool = False) -> dict[CaseId, ScrollParams | None]:
    """Lexicographically first in-bounds tuple for each case."""
    bounds = bounds or SearchBounds()
    found: dict[CaseId, ScrollParams | None] = {c: None for c in CaseId}
    missing = len(found)
    for p in bounds.params():
        c = classify(p, strict_3j, literal_3kl)
        if c.smooth and found[c.case] is None:
            found[c.case] = p
            missing -= 1
            if not missing:
                break
    return found


CSV_FIELDS = ["d1", "d2", "d3", "d4", "b1", "b2", "case", "chi", "standard", "rational"]


def export_atlas(records: Iterable[FamilyRecord], fmt: str = "json") -> bytes:
    """Deterministic UTF-8 serialization with LF line endings."""
    records = list(records)
    if fmt == "json":
        text = json.dumps([r.as_dict() for r in records], indent=2) + "\n"
        return text.encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in records:
            d = r.as_dict()
            w.writerow(list(d["d"]) + [d["b1"], d["b2"], d["case"], d["chi"],
                                       str(d["standard"]).lower(), str(d["rational"]).lower()])
        return buf.getvalue().encode("utf-8")
    raise ValueError(f"unknown atlas format {fmt!r}")


def _record_from(d, b1, b2, case, chi, standard, rational) -> FamilyRecord:
    p = ScrollParams(tuple(int(x) for x in d), int(b1), int(b2))
    return FamilyRecord(p, CaseId.parse(case), int(chi), bool(standard),
                        RationalityVerdict(bool(rational), int(chi)))


def parse_atlas(data: bytes, fmt: str = "json") -> list[FamilyRecord]:
    text = data.decode("utf-8")
    if fmt == "json":
        return [_record_from(o["d"], o["b1"], o["b2"], o["case"], o["chi"], o["standard"],
                             o["rational"]) for o in json.loads(text)]
    if fmt == "csv":
        rows = list(csv.DictReader(io.StringIO(text)))
        return [_record_from([r["d1"], r["d2"], r["d3"], r["d4"]], r["b1"], r["b2"], r["case"],
                             r["chi"], r["standard"] == "true", r["rational"] == "true")
                for r in rows]
    raise ValueError(f"unknown atlas format {fmt!r}")
