"""Exact height censuses of the minimal j = 0 and j = 1728 families.

A census counts minimal curves of height max(4|A|^3, 27B^2) <= X, grouped
overall, by torsion subgroup, or (j = 1728) by isogeny-torsion graph, and
classified by Kodaira type at 3 (j = 0) or 2 (j = 1728).

Two evaluation paths exist and are tested against each other:

  * census()            fast path: segmented k-power-free sieves plus O(1)
                        congruence classification, residue-class counting
                        for j = 1728.  Peak memory is O(chunk), so the
                        height bound is limited only by runtime.
  * census_by_enumeration()
                        folds the member stream of enumerate_members();
                        used for cross-checks and small bounds.

Counts are deterministic: chunking and worker counts never change the
result, and rows are emitted in a canonical order (group, then symbol).

The four curves of the isogeny classes 32.a / 64.a (A in {+-1, +-4}) and
the two enumerable curves of 36.a (B in {1, -27}) are "exceptional": they
do not belong to the infinite graphs T43 / L22 or to the parameterized
torsion families.  Overall counts include them (they are minimal curves
like any other); grouped counts omit them unless include_exceptional is
set, in which case they appear under the separate group "exceptional".

Sign defaults differ per family and are part of the request contract:
j = 1728 censuses default to both signs of A, j = 0 censuses to positive
B only.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .arith import MAX_SIEVE_LIMIT, iroot, primes_up_to, _sieve_segment
from .families import (
    EXCEPTIONAL_J0,
    EXCEPTIONAL_J1728,
    FamilyMember,
    IsogenyTorsionGraph,
    TorsionGroup,
    classify_j1728,
    kodaira_fast_j0,
    kodaira_fast_j1728,
    minimal_j0,
    minimal_j1728,
    torsion_j0,
)
from .tate import KodairaType
from .weierstrass import ShortModel

FAMILIES = ("j0", "j1728")
GROUPINGS = ("overall", "by_torsion", "by_graph")
SIGNS = ("both", "positive")

GROUP_ALL = "all"
GROUP_EXCEPTIONAL = "exceptional"


class CensusOverflowError(OverflowError):
    """Height bound implies a parameter range beyond the supported size."""


@dataclass(frozen=True)
class CensusRequest:
    family: str
    height_bound: int
    grouping: str = "overall"
    signs: Optional[str] = None  # None resolves to the family default
    include_exceptional: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if self.grouping not in GROUPINGS:
            raise ValueError(f"grouping must be one of {GROUPINGS}")
        if self.signs is not None and self.signs not in SIGNS:
            raise ValueError(f"signs must be one of {SIGNS}")
        if self.grouping == "by_graph" and self.family != "j1728":
            raise ValueError("by_graph grouping applies to j1728 only")
        if self.height_bound < 1:
            raise ValueError("height bound must be >= 1")

    @property
    def resolved_signs(self) -> str:
        if self.signs is not None:
            return self.signs
        return "both" if self.family == "j1728" else "positive"


@dataclass(frozen=True)
class CensusRow:
    group: str
    kodaira: KodairaType
    count: int


@dataclass
class CensusReport:
    request: CensusRequest
    rows: List[CensusRow] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(r.count for r in self.rows)

    def counts_for(self, group: str) -> Dict[str, int]:
        return {r.kodaira.ascii(): r.count for r in self.rows if r.group == group}


def parameter_bound(family: str, height_bound: int) -> int:
    """Largest |A| (resp. |B|) whose short model has height <= the bound."""
    if family == "j1728":
        return iroot(height_bound // 4, 3)
    return math.isqrt(height_bound // 27)


_Tally = Counter  # keys: (group_label, KodairaType)


# ---------------------------------------------------------------------------
# member stream


def enumerate_members(req: CensusRequest) -> Iterator[FamilyMember]:
    """All minimal family members of height <= the bound, exactly once, in
    ascending |parameter| order (positive sign first).  Exceptional-class
    members are included, tagged with their LMFDB label."""
    signs = req.resolved_signs
    bound = parameter_bound(req.family, req.height_bound)
    for m in range(1, bound + 1):
        for value in (m, -m) if signs == "both" else (m,):
            if req.family == "j1728":
                if not minimal_j1728(value):
                    continue
                torsion, graph = classify_j1728(value)
                label = EXCEPTIONAL_J1728.get(value, (None,))[0]
                yield FamilyMember(
                    family="j1728",
                    model=ShortModel(value, 0),
                    parameter=value,
                    torsion=torsion,
                    kodaira=kodaira_fast_j1728(value),
                    graph=graph,
                    exceptional_label=label,
                )
            else:
                if not minimal_j0(value):
                    continue
                label = EXCEPTIONAL_J0.get(value, (None,))[0]
                yield FamilyMember(
                    family="j0",
                    model=ShortModel(0, value),
                    parameter=value,
                    torsion=torsion_j0(value),
                    kodaira=kodaira_fast_j0(value),
                    graph=None,
                    exceptional_label=label,
                )


def _raw_group(member: FamilyMember, grouping: str) -> str:
    # overall tallies carry everything under "all"; exceptional members are
    # split out during assembly (same convention as the fast chunks)
    if grouping == "overall":
        return GROUP_ALL
    if member.exceptional_label is not None:
        return GROUP_EXCEPTIONAL
    if grouping == "by_torsion":
        return member.torsion.value
    return member.graph.value


# ---------------------------------------------------------------------------
# fast chunk evaluation


_J1728_TYPE_OF_RESIDUE = {r: kodaira_fast_j1728(r) for r in range(1, 16)}


def _chunk_j1728(lo: int, hi: int, base_primes, signs: str, grouping: str) -> _Tally:
    seg = _sieve_segment(lo, hi, 4, base_primes)
    tally = _Tally()

    # residue-class counts of fourth-power-free m in [lo, hi]
    counts = [0] * 16
    for r in range(16):
        start = lo + ((r - lo) % 16)
        if start <= hi:
            counts[r] = seg[start - lo :: 16].count(1)

    def add_all(group_of_type):
        for r in range(1, 16):
            if counts[r]:
                tally[(group_of_type, _J1728_TYPE_OF_RESIDUE[r])] += counts[r]
            if signs == "both" and counts[r]:
                tally[(group_of_type, _J1728_TYPE_OF_RESIDUE[16 - r])] += counts[r]

    if grouping == "overall":
        add_all(GROUP_ALL)
    else:
        add_all("_all")  # temporary bucket; L22 is derived by subtraction

    if grouping != "overall":
        # square parameters A = +-t^2 (t squarefree iff the flag is set)
        # form T43, except t in {1, 2}: the exceptional classes 32.a / 64.a
        for t in range(math.isqrt(lo - 1) + 1, math.isqrt(hi) + 1):
            if not seg[t * t - lo]:
                continue
            group = GROUP_EXCEPTIONAL if t <= 2 else "_t43"
            tally[(group, _II if t % 2 else _I3S)] += 1
            if signs == "both":
                tally[(group, _III if t % 2 else _I2S)] += 1
    return tally


# square-parameter types: A = +t^2 gives II (t odd) / I3* (t even),
# A = -t^2 gives III (t odd) / I2* (t even)
_II = KodairaType("II")
_III = KodairaType("III")
_I2S = KodairaType("I*", 2)
_I3S = KodairaType("I*", 3)


def _chunk_j0(lo: int, hi: int, base_primes, signs: str, grouping: str) -> _Tally:
    seg = _sieve_segment(lo, hi, 6, base_primes)
    tally = _Tally()
    sq = math.isqrt(lo - 1) + 1    # next square candidate
    cb = iroot(lo - 1, 3) + 1      # next cube candidate
    both = signs == "both"
    for b in range(lo, hi + 1):
        if sq * sq < b:
            sq += 1
        if cb * cb * cb < b:
            cb += 1
        if not seg[b - lo]:
            continue
        is_sq = sq * sq == b
        is_cb = cb * cb * cb == b
        v2_is_4 = b % 32 == 16
        for B in (b, -b) if both else (b,):
            if v2_is_4 and (B // 16) % 4 != 3:
                continue
            if grouping == "overall":
                group = GROUP_ALL
            elif B in EXCEPTIONAL_J0:
                group = GROUP_EXCEPTIONAL
            else:
                if B > 0 and is_sq:
                    group = (TorsionGroup.Z6 if is_cb else TorsionGroup.Z3).value
                elif is_cb:
                    group = TorsionGroup.Z2.value
                else:
                    group = TorsionGroup.TRIVIAL.value
            tally[(group, kodaira_fast_j0(B))] += 1
    return tally


# ---------------------------------------------------------------------------
# assembly


def _exceptional_members_in_range(req: CensusRequest) -> List[Tuple[str, KodairaType]]:
    bound = parameter_bound(req.family, req.height_bound)
    signs = req.resolved_signs
    out = []
    source = EXCEPTIONAL_J1728 if req.family == "j1728" else EXCEPTIONAL_J0
    fast = kodaira_fast_j1728 if req.family == "j1728" else kodaira_fast_j0
    for value, data in source.items():
        if abs(value) > bound or (signs == "positive" and value < 0):
            continue
        out.append((data[0], fast(value)))
    return out


def _resolve_j1728_buckets(req: CensusRequest, tally: _Tally) -> _Tally:
    """Turn the fast-path buckets (_all, _t43, exceptional) into direct group
    labels: L22 = _all - _t43 - exceptional."""
    final = _Tally()
    for (group, kt), cnt in tally.items():
        final[("_l22" if group == "_all" else group, kt)] += cnt
        if group != "_all":
            final[("_l22", kt)] -= cnt
    regrouped = _Tally()
    for (group, kt), cnt in final.items():
        if cnt == 0:
            continue
        assert cnt > 0, "chunk subtraction went negative; tallying bug"
        if group == "_l22":
            group = IsogenyTorsionGraph.L22.value
        elif group == "_t43":
            group = IsogenyTorsionGraph.T43.value
        regrouped[(group, kt)] = cnt
    if req.grouping != "by_torsion":
        return regrouped
    # L22 and T43(+) members have torsion Z2; T43(-) members Z2xZ2
    retallied = _Tally()
    for (group, kt), cnt in regrouped.items():
        if group == GROUP_EXCEPTIONAL:
            retallied[(group, kt)] += cnt
        elif group == IsogenyTorsionGraph.L22.value or kt in (_II, _I3S):
            retallied[(TorsionGroup.Z2.value, kt)] += cnt
        else:
            retallied[(TorsionGroup.Z2xZ2.value, kt)] += cnt
    return retallied


def _assemble(req: CensusRequest, tally: _Tally) -> CensusReport:
    grouping = req.grouping
    final = _Tally(tally)

    if grouping == "overall":
        # chunk tallies put everything (including exceptional members) into
        # "all"; split them out here so the flag controls presentation only
        for label, kt in _exceptional_members_in_range(req):
            final[(GROUP_ALL, kt)] -= 1
            final[(GROUP_EXCEPTIONAL, kt)] += 1

    if req.include_exceptional:
        rows = [(g, kt, c) for (g, kt), c in final.items() if c > 0]
    elif grouping == "overall":
        merged = _Tally()
        for (g, kt), c in final.items():
            if c > 0:
                merged[(GROUP_ALL, kt)] += c
        rows = [(g, kt, c) for (g, kt), c in merged.items()]
    else:
        rows = [(g, kt, c) for (g, kt), c in final.items() if c > 0 and g != GROUP_EXCEPTIONAL]

    rows.sort(key=lambda r: (r[0], r[1].sort_key()))
    return CensusReport(request=req, rows=[CensusRow(g, kt, c) for g, kt, c in rows])


# ---------------------------------------------------------------------------
# public entry points


def census(
    req: CensusRequest,
    chunk_size: Optional[int] = None,
    workers: int = 1,
) -> CensusReport:
    """Exact census via segmented sieves.  The result is independent of
    chunk_size and workers; chunks are merged by summation and rows are
    sorted canonically."""
    bound = parameter_bound(req.family, req.height_bound)
    if bound > MAX_SIEVE_LIMIT:
        raise CensusOverflowError(
            f"height bound {req.height_bound} needs parameters up to {bound}"
        )
    if bound < 1:
        return _assemble(req, _Tally())
    if chunk_size is None:
        chunk_size = max(1, min(bound, 1 << 22))
    k = 4 if req.family == "j1728" else 6
    base_primes = primes_up_to(iroot(bound, k))
    chunk_fn = _chunk_j1728 if req.family == "j1728" else _chunk_j0
    spans = [(lo, min(lo + chunk_size - 1, bound)) for lo in range(1, bound + 1, chunk_size)]
    signs, grouping = req.resolved_signs, req.grouping

    tally = _Tally()
    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(chunk_fn, lo, hi, base_primes, signs, grouping)
                for lo, hi in spans
            ]
            for fut in futures:
                tally.update(fut.result())
    else:
        for lo, hi in spans:
            tally.update(chunk_fn(lo, hi, base_primes, signs, grouping))
    if req.family == "j1728" and grouping != "overall":
        tally = _resolve_j1728_buckets(req, tally)
    return _assemble(req, tally)


def census_by_enumeration(req: CensusRequest) -> CensusReport:
    """Census as a count-fold of enumerate_members(); the fast path must
    agree with this exactly."""
    tally = _Tally()
    for member in enumerate_members(req):
        tally[(_raw_group(member, req.grouping), member.kodaira)] += 1
    return _assemble(req, tally)


# ---------------------------------------------------------------------------
# serialization


def report_to_csv(report: CensusReport, unicode_symbols: bool = False) -> str:
    lines = ["family,group,kodaira,count"]
    for row in report.rows:
        symbol = row.kodaira.unicode() if unicode_symbols else row.kodaira.ascii()
        lines.append(f"{report.request.family},{row.group},{symbol},{row.count}")
    return "\n".join(lines) + "\n"


def report_to_json(report: CensusReport) -> str:
    req = report.request
    return json.dumps(
        {
            "request": {
                "family": req.family,
                "height_bound": req.height_bound,
                "grouping": req.grouping,
                "signs": req.resolved_signs,
                "include_exceptional": req.include_exceptional,
            },
            "rows": [
                {"group": r.group, "kodaira": r.kodaira.ascii(), "count": r.count}
                for r in report.rows
            ],
            "total": report.total,
        },
        indent=2,
    )
