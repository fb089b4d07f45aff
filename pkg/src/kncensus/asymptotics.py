"""Closed-form leading terms for the census counting functions, and
comparison of observed censuses against them.

Each family/group key carries per-symbol leading constants of the shape

    count(X)  ~  c * alg_coeff * root_base^root_exp / zeta(zeta_arg) * X^main_exp

with c and alg_coeff exact rationals, kept separate from floating-point
evaluation so tests can assert the rationals exactly.  The five keys:

    T43         c/(zeta(2) 2^(1/3)) X^(1/6)   II,III: 2/3   I2*,I3*: 1/3
    L22         c/(zeta(4) 4^(1/3)) X^(1/3)   III 8/15, II 4/15,
                                              I2*,I3*,III* 1/15
    j0-trivial  c 62/(63 sqrt(27) zeta(6)) X^(1/2)
                                              II 243/364, III 81/364,
                                              IV 27/364, IV* 9/364,
                                              III* 3/364, II* 1/364
    j0-Z2       c 2/(sqrt(3) zeta(2)) X^(1/6) III 3/4, III* 1/4
    j0-Z3       c 2 3^(1/4)/(7 zeta(3)) X^(1/4)
                                              II 6/13, III 3/13, IV 3/13,
                                              IV* 1/13

Sign conventions (see the census module): the L22 and j0-trivial constants
describe positive parameters and are doubled for a both-signs census; the
T43 and j0-Z2 constants already cover both models / both signs.  Overall
censuses are compared against the dominant key (L22 resp. j0-trivial).

The T43 per-model constants 2/3, 2/3, 1/3, 1/3 sum to 2, not 1, because
they normalize two distinct one-parameter models; the proportions among
T43 curves are 1/3, 1/3, 1/6, 1/6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .census import GROUP_ALL, CensusReport
from .tate import KodairaType

# Apery's constant zeta(3); zeta at even arguments is computed from pi.
ZETA3 = 1.2020569031595942854


def zeta(k: int) -> float:
    if k == 2:
        return math.pi ** 2 / 6
    if k == 3:
        return ZETA3
    if k == 4:
        return math.pi ** 4 / 90
    if k == 6:
        return math.pi ** 6 / 945
    raise ValueError(f"zeta({k}) not needed by any formula here")


@dataclass(frozen=True)
class AsymptoticFormula:
    key: str
    kodaira: KodairaType
    c: Fraction
    zeta_arg: int
    alg_coeff: Fraction
    root_base: int
    root_exp: Fraction
    main_exp: Fraction
    error_exp: Fraction

    def leading(self, X: int, signs: str = "both") -> float:
        factor = _sign_factor(self.key, self.kodaira, signs)
        if factor == 0:
            return 0.0
        return (
            float(self.c * self.alg_coeff * factor)
            * self.root_base ** float(self.root_exp)
            / zeta(self.zeta_arg)
            * float(X) ** float(self.main_exp)
        )

    def relative_tolerance(self, X: int, coeff: float = 10.0) -> float:
        """Generous cover of the error term relative to the main term:
        coeff * X^(error_exp - main_exp)."""
        return coeff * float(X) ** float(self.error_exp - self.main_exp)


def _f(key, symbol, c, zeta_arg, alg_coeff, root_base, root_exp, main_exp, error_exp):
    return AsymptoticFormula(
        key=key,
        kodaira=KodairaType.from_string(symbol),
        c=Fraction(c[0], c[1]),
        zeta_arg=zeta_arg,
        alg_coeff=Fraction(alg_coeff[0], alg_coeff[1]),
        root_base=root_base,
        root_exp=Fraction(root_exp[0], root_exp[1]),
        main_exp=Fraction(main_exp[0], main_exp[1]),
        error_exp=Fraction(error_exp[0], error_exp[1]),
    )


def _build_formulas() -> Dict[Tuple[str, str], AsymptoticFormula]:
    formulas: List[AsymptoticFormula] = []
    for symbol, c in (("II", (2, 3)), ("III", (2, 3)), ("I2*", (1, 3)), ("I3*", (1, 3))):
        formulas.append(_f("T43", symbol, c, 2, (1, 1), 2, (-1, 3), (1, 6), (1, 12)))
    for symbol, c in (
        ("III", (8, 15)),
        ("II", (4, 15)),
        ("I2*", (1, 15)),
        ("I3*", (1, 15)),
        ("III*", (1, 15)),
    ):
        formulas.append(_f("L22", symbol, c, 4, (1, 1), 2, (-2, 3), (1, 3), (1, 6)))
    for symbol, c in (
        ("II", (243, 364)),
        ("III", (81, 364)),
        ("IV", (27, 364)),
        ("IV*", (9, 364)),
        ("III*", (3, 364)),
        ("II*", (1, 364)),
    ):
        formulas.append(_f("j0-trivial", symbol, c, 6, (62, 63), 3, (-3, 2), (1, 2), (1, 4)))
    for symbol, c in (("III", (3, 4)), ("III*", (1, 4))):
        formulas.append(_f("j0-Z2", symbol, c, 2, (2, 1), 3, (-1, 2), (1, 6), (1, 12)))
    for symbol, c in (("II", (6, 13)), ("III", (3, 13)), ("IV", (3, 13)), ("IV*", (1, 13))):
        formulas.append(_f("j0-Z3", symbol, c, 3, (2, 7), 3, (1, 4), (1, 4), (1, 12)))
    return {(f.key, f.kodaira.ascii()): f for f in formulas}


FORMULAS: Dict[Tuple[str, str], AsymptoticFormula] = _build_formulas()

# negative parameters only: these T43 rows vanish in a positive-sign census
_T43_NEGATIVE_ONLY = ("III", "I2*")


def _sign_factor(key: str, kodaira: KodairaType, signs: str) -> Fraction:
    if signs not in ("both", "positive"):
        raise ValueError("signs must be 'both' or 'positive'")
    symbol = kodaira.ascii()
    if key == "T43":
        if signs == "positive" and symbol in _T43_NEGATIVE_ONLY:
            return Fraction(0)
        return Fraction(1)
    if key == "j0-Z2":
        return Fraction(1) if signs == "both" else Fraction(1, 2)
    if key == "j0-Z3":
        return Fraction(1)
    # L22 and j0-trivial constants describe positive parameters
    return Fraction(2) if signs == "both" else Fraction(1)


def formula_for(key: str, kodaira: KodairaType) -> AsymptoticFormula:
    try:
        return FORMULAS[(key, kodaira.ascii())]
    except KeyError:
        raise ValueError(f"no formula for ({key}, {kodaira.ascii()})") from None


def predicted(key: str, kodaira: KodairaType, X: int, signs: str = "both") -> float:
    """Leading-term prediction for the (key, symbol) census count at X."""
    if X < 1:
        raise ValueError("X must be >= 1")
    return formula_for(key, kodaira).leading(X, signs)


_DENSITY = {
    (2, "odd"): Fraction(2, 3),
    (2, "coprime_to_3"): Fraction(3, 4),
    (3, "odd"): Fraction(4, 7),
    (3, "v2_equals_1"): Fraction(2, 7),
    (4, "odd"): Fraction(8, 15),
}


def density_constant(k: int, condition: str = "unrestricted") -> Fraction:
    """Rational multiplier r such that the density of k-power-free positive
    integers satisfying the side condition is r / zeta(k)."""
    if condition == "unrestricted":
        if k < 2:
            raise ValueError("k must be >= 2")
        return Fraction(1)
    try:
        return _DENSITY[(k, condition)]
    except KeyError:
        raise ValueError(f"no density constant for (k={k}, {condition!r})") from None


# group label on a census row -> formula key
_GROUP_KEYS = {
    ("j1728", GROUP_ALL): "L22",  # L22 dominates the overall count
    ("j1728", "L22"): "L22",
    ("j1728", "T43"): "T43",
    ("j0", GROUP_ALL): "j0-trivial",  # trivial torsion dominates
    ("j0", "trivial"): "j0-trivial",
    ("j0", "Z2"): "j0-Z2",
    ("j0", "Z3"): "j0-Z3",
}


@dataclass(frozen=True)
class ComparisonRow:
    group: str
    kodaira: KodairaType
    observed: int
    predicted: Optional[float]
    rel_error: Optional[float]
    tolerance: Optional[float]

    @property
    def within(self) -> Optional[bool]:
        if self.rel_error is None or self.tolerance is None:
            return None
        return abs(self.rel_error) <= self.tolerance


def compare(report: CensusReport, tolerance_coeff: float = 10.0) -> List[ComparisonRow]:
    """Observed vs predicted for every report row, in canonical order.
    Rows without a formula (exceptional groups, unrefined torsion rows of
    j = 1728) come back unpredicted with rel_error None."""
    req = report.request
    out: List[ComparisonRow] = []
    for row in report.rows:
        key = _GROUP_KEYS.get((req.family, row.group))
        formula = FORMULAS.get((key, row.kodaira.ascii())) if key else None
        if formula is None:
            out.append(ComparisonRow(row.group, row.kodaira, row.count, None, None, None))
            continue
        pred = formula.leading(req.height_bound, req.resolved_signs)
        rel = row.count / pred - 1.0 if pred > 0 else None
        tol = formula.relative_tolerance(req.height_bound, tolerance_coeff)
        out.append(ComparisonRow(row.group, row.kodaira, row.count, pred, rel, tol))
    return out


def comparison_to_csv(rows: List[ComparisonRow], family: str) -> str:
    lines = ["family,group,kodaira,observed,predicted,rel_error"]
    for r in rows:
        pred = f"{r.predicted:.1f}" if r.predicted is not None else ""
        rel = f"{r.rel_error:.6f}" if r.rel_error is not None else ""
        lines.append(f"{family},{r.group},{r.kodaira.ascii()},{r.observed},{pred},{rel}")
    return "\n".join(lines) + "\n"
