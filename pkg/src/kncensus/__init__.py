"""Kodaira-Neron reduction types and exact height censuses for rational
elliptic curves with j-invariant 0 (at p = 3) and 1728 (at p = 2)."""

from .arith import (
    KFreeTable,
    is_kth_power_free,
    is_perfect_power,
    is_prime,
    iter_kfree_segments,
    kfree_sieve,
    valuation,
)
from .weierstrass import (
    Invariants,
    ShortModel,
    SingularModelError,
    WeierstrassModel,
    format_model,
    format_short,
    height,
    invariants,
    j_invariant,
    parse_model,
    parse_short,
)
from .tate import KodairaType, LocalData, is_minimal_at, reduction_class, tate
from .families import (
    FamilyMember,
    IsogenyTorsionGraph,
    TorsionGroup,
    classify_j1728,
    exceptional_curves,
    kodaira_fast_j0,
    kodaira_fast_j1728,
    minimal_j0,
    minimal_j1728,
    torsion_j0,
)
from .census import (
    CensusReport,
    CensusRequest,
    CensusRow,
    census,
    census_by_enumeration,
    enumerate_members,
    report_to_csv,
    report_to_json,
)
from .asymptotics import (
    AsymptoticFormula,
    ComparisonRow,
    compare,
    density_constant,
    predicted,
)

__version__ = "0.1.0"
