"""Integral Weierstrass models, standard invariants, j-invariant, height.

Conventions follow the classical formulaire:

    b2 = a1^2 + 4 a2            c4 = b2^2 - 24 b4
    b4 = 2 a4 + a1 a3           c6 = -b2^3 + 36 b2 b4 - 216 b6
    b6 = a3^2 + 4 a6            disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
    b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2

    j = c4^3 / disc             1728 disc = c4^3 - c6^2

The j-invariant is kept as an exact Fraction so that multiplicative
Kodaira indices (n = -v_p(j)) can be read off without rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class SingularModelError(ValueError):
    """Raised when coefficients define a singular curve (disc = 0)."""


def _b_invariants(a1: int, a2: int, a3: int, a4: int, a6: int):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def _discriminant(b2: int, b4: int, b6: int, b8: int) -> int:
    return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


@dataclass(frozen=True)
class WeierstrassModel:
    """Integral long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

    Construction rejects singular coefficient tuples.
    """

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self):
        if _discriminant(*_b_invariants(*self.coefficients())) == 0:
            raise SingularModelError(f"singular model {self.coefficients()}")

    def coefficients(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)


@dataclass(frozen=True)
class ShortModel:
    """Short model y^2 = x^3 + A x + B; embeds as (0, 0, 0, A, B)."""

    A: int
    B: int

    def __post_init__(self):
        if 4 * self.A ** 3 + 27 * self.B ** 2 == 0:
            raise SingularModelError(f"singular short model A={self.A}, B={self.B}")

    def to_weierstrass(self) -> WeierstrassModel:
        return WeierstrassModel(0, 0, 0, self.A, self.B)


@dataclass(frozen=True)
class Invariants:
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    disc: int
    j: Fraction


def invariants(m: WeierstrassModel) -> Invariants:
    """All standard invariants of the model, with j as an exact Fraction."""
    a1, a2, a3, a4, a6 = m.coefficients()
    b2, b4, b6, b8 = _b_invariants(a1, a2, a3, a4, a6)
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    disc = _discriminant(b2, b4, b6, b8)
    return Invariants(b2, b4, b6, b8, c4, c6, disc, Fraction(c4 ** 3, disc))


def discriminant(m: WeierstrassModel) -> int:
    return _discriminant(*_b_invariants(*m.coefficients()))


def j_invariant(m: WeierstrassModel) -> Fraction:
    """Exact j-invariant c4^3 / disc.  For a short model this equals
    1728 * 4A^3 / (4A^3 + 27B^2)."""
    return invariants(m).j


def height(m: ShortModel) -> int:
    """Naive height max(4|A|^3, 27 B^2) of a short model; the ordering used
    for all censuses."""
    return max(4 * abs(m.A) ** 3, 27 * m.B ** 2)


def rst_transform(m: WeierstrassModel, r: int, s: int, t: int) -> WeierstrassModel:
    """Coordinate change x -> x + r, y -> y + s x + t (unimodular, u = 1)."""
    a1, a2, a3, a4, a6 = m.coefficients()
    return WeierstrassModel(
        a1 + 2 * s,
        a2 - s * a1 + 3 * r - s * s,
        a3 + r * a1 + 2 * t,
        a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
        a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1,
    )


def rescale(m: WeierstrassModel, u: int) -> WeierstrassModel:
    """Divide out u: ai -> ai / u^i.  All divisions must be exact."""
    a1, a2, a3, a4, a6 = m.coefficients()
    powers = (u, u ** 2, u ** 3, u ** 4, u ** 6)
    for a, q in zip((a1, a2, a3, a4, a6), powers):
        if a % q:
            raise ValueError(f"coefficients not divisible by u^i for u = {u}")
    return WeierstrassModel(a1 // u, a2 // u ** 2, a3 // u ** 3, a4 // u ** 4, a6 // u ** 6)


def parse_model(text: str) -> WeierstrassModel:
    """Parse "a1,a2,a3,a4,a6" into a WeierstrassModel."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 5:
        raise ValueError(f"expected 5 comma-separated integers, got {text!r}")
    try:
        a = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"non-integer coefficient in {text!r}") from None
    return WeierstrassModel(*a)


def parse_short(text: str) -> ShortModel:
    """Parse "A,B" into a ShortModel."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"expected 2 comma-separated integers, got {text!r}")
    try:
        A, B = (int(p) for p in parts)
    except ValueError:
        raise ValueError(f"non-integer coefficient in {text!r}") from None
    return ShortModel(A, B)


def format_model(m: WeierstrassModel) -> str:
    return ",".join(str(a) for a in m.coefficients())


def format_short(m: ShortModel) -> str:
    return f"{m.A},{m.B}"
