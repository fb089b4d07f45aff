"""Tate's algorithm over Q at a prime p, for any integral Weierstrass model.

This is the ground-truth oracle behind every fast classifier in the
package.  The implementation follows the classical 11-step procedure:

  step 1   v(disc) = 0                         -> I0
  step 2   singular point moved to (0,0); node -> In, n = v(disc)
  step 3   v(a6) < 2                           -> II
  step 4   v(b8) < 3                           -> III
  step 5   v(b6) < 3                           -> IV
  steps 6-7  cubic P(T) = T^3 + a2/p T^2 + a4/p^2 T + a6/p^3 mod p:
             distinct roots -> I0*; double root -> In* (n >= 1)
  step 8   triple root, Y^2 + a3/p^2 Y - a6/p^4 separable -> IV*
  step 9   v(a4) < 4                           -> III*
  step 10  v(a6) < 6                           -> II*
  step 11  non-minimal: divide ai by p^i and re-run

Conductor exponents come out of Ogg's formula f = v(disc) + 1 - m with m
the number of fiber components.  Root finding mod p is by exhaustive
search over 0..p-1 (p is 2 or 3 in every production path; larger p uses
the same loop).  All coordinate translations reduce representatives into
0..p-1, so returned minimal models are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .arith import is_prime
from .weierstrass import (
    SingularModelError,
    WeierstrassModel,
    _b_invariants,
    _discriminant,
    discriminant,
)

_INF = 1 << 62

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")

_KIND_ORDER = {"I": 0, "I*": 1, "II": 2, "III": 3, "IV": 4, "IV*": 5, "III*": 6, "II*": 7}


@dataclass(frozen=True)
class KodairaType:
    """Kodaira symbol: kind in {I, I*, II, III, IV, II*, III*, IV*}, with an
    index n for the I / I* kinds (I0 = good reduction)."""

    kind: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown Kodaira kind {self.kind!r}")
        if self.kind in ("I", "I*"):
            if self.n is None or self.n < 0:
                raise ValueError("I / I* symbols need an index n >= 0")
        elif self.n is not None:
            raise ValueError(f"{self.kind} carries no index")

    def __str__(self) -> str:
        return self.ascii()

    def ascii(self) -> str:
        if self.kind == "I":
            return f"I{self.n}"
        if self.kind == "I*":
            return f"I{self.n}*"
        return self.kind

    def unicode(self) -> str:
        """Render the index of In / In* as unicode subscripts."""
        if self.kind == "I":
            return "I" + str(self.n).translate(_SUBSCRIPTS)
        if self.kind == "I*":
            return "I" + str(self.n).translate(_SUBSCRIPTS) + "*"
        return self.kind

    def sort_key(self) -> Tuple[int, int]:
        return (_KIND_ORDER[self.kind], self.n or 0)

    @staticmethod
    def from_string(text: str) -> "KodairaType":
        text = text.strip()
        if text in ("II", "III", "IV", "II*", "III*", "IV*"):
            return KodairaType(text)
        star = text.endswith("*")
        body = text[:-1] if star else text
        if body.startswith("I") and body[1:].isdigit():
            return KodairaType("I*" if star else "I", int(body[1:]))
        raise ValueError(f"cannot parse Kodaira symbol {text!r}")


def kodaira(kind: str, n: Optional[int] = None) -> KodairaType:
    return KodairaType(kind, n)


I0 = KodairaType("I", 0)
II = KodairaType("II")
III = KodairaType("III")
IV = KodairaType("IV")
II_STAR = KodairaType("II*")
III_STAR = KodairaType("III*")
IV_STAR = KodairaType("IV*")
I0_STAR = KodairaType("I*", 0)


@dataclass(frozen=True)
class LocalData:
    """Local reduction data at p: Kodaira symbol, conductor exponent,
    Tamagawa number, minimality of the input, and a p-minimal model."""

    p: int
    kodaira: KodairaType
    conductor_exponent: int
    tamagawa: int
    was_minimal: bool
    minimal_model: WeierstrassModel
    scaling_exponent: int

    @property
    def reduction(self) -> str:
        if self.conductor_exponent == 0:
            return "good"
        if self.conductor_exponent == 1:
            return "multiplicative"
        return "additive"


def _val(x: int, p: int) -> int:
    if x == 0:
        return _INF
    if p == 2:
        return (x & -x).bit_length() - 1
    v = 0
    x = abs(x)
    while x % p == 0:
        x //= p
        v += 1
    return v


def _rst(a, r, s, t):
    a1, a2, a3, a4, a6 = a
    return (
        a1 + 2 * s,
        a2 - s * a1 + 3 * r - s * s,
        a3 + r * a1 + 2 * t,
        a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
        a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1,
    )


def _singular_point(a, p):
    """The singular point of the reduction mod p, as representatives in 0..p-1."""
    a1, a2, a3, a4, a6 = a
    for x in range(p):
        x2 = x * x
        dx = -(3 * x2 + 2 * a2 * x + a4)
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - x2 * x - a2 * x2 - a4 * x - a6) % p:
                continue
            if (dx + a1 * y) % p:
                continue
            if (2 * y + a1 * x + a3) % p:
                continue
            return x, y
    raise ArithmeticError(f"no singular point mod {p}; algorithm invariant broken")


def _quad_root_count(a, b, c, p):
    return sum(1 for x in range(p) if (a * x * x + b * x + c) % p == 0)


def _quad_root(a, b, c, p):
    for x in range(p):
        if (a * x * x + b * x + c) % p == 0:
            return x
    raise ArithmeticError(f"quadratic has no root mod {p}; algorithm invariant broken")


def _cubic_root_count(b, c, d, p):
    return sum(1 for x in range(p) if (((x + b) * x + c) * x + d) % p == 0)


def _cubic_root(b, c, d, p):
    for x in range(p):
        if (((x + b) * x + c) * x + d) % p == 0:
            return x
    raise ArithmeticError(f"cubic has no root mod {p}; algorithm invariant broken")


def _cubic_multiple_root(b, c, d, p):
    for x in range(p):
        if (((x + b) * x + c) * x + d) % p == 0 and (3 * x * x + 2 * b * x + c) % p == 0:
            return x
    raise ArithmeticError(f"cubic has no multiple root mod {p}; algorithm invariant broken")


def _tate_core(a, p):
    """Run the algorithm on a coefficient 5-tuple.

    Returns (kind, n, conductor_exponent, tamagawa, minimal_tuple, scaling).
    minimal_tuple is the model at the start of the terminating pass, i.e.
    the input when minimal, else the input rescaled scaling times.
    """
    b2, b4, b6, b8 = _b_invariants(*a)
    disc = _discriminant(b2, b4, b6, b8)
    if disc == 0:
        raise SingularModelError(f"singular model {a}")
    max_scaling = _val(disc, p) // 12 + 1
    scaling = 0
    while True:
        pass_start = a
        a1, a2, a3, a4, a6 = a
        b2, b4, b6, b8 = _b_invariants(a1, a2, a3, a4, a6)
        disc = _discriminant(b2, b4, b6, b8)
        n = _val(disc, p)

        if n == 0:
            return "I", 0, 0, 1, pass_start, scaling

        # Step 2: move the singular point of the reduction to (0,0),
        # after which p | a3, a4, a6.
        x0, y0 = _singular_point(a, p)
        if x0 or y0:
            a = _rst(a, x0, 0, y0)
            a1, a2, a3, a4, a6 = a
            b2, b4, b6, b8 = _b_invariants(a1, a2, a3, a4, a6)

        if b2 % p:
            # Node: multiplicative reduction, type In.  Split iff the
            # tangent quadratic T^2 + a1 T - a2 has roots in F_p.
            if _quad_root_count(1, a1, -a2, p):
                cp = n
            else:
                cp = 2 if n % 2 == 0 else 1
            return "I", n, 1, cp, pass_start, scaling

        # Step 3
        if _val(a6, p) < 2:
            return "II", None, n, 1, pass_start, scaling
        # Step 4
        if _val(b8, p) < 3:
            return "III", None, n - 1, 2, pass_start, scaling
        # Step 5
        if _val(b6, p) < 3:
            cp = 3 if _quad_root_count(1, a3 // p, -(a6 // (p * p)), p) else 1
            return "IV", None, n - 2, cp, pass_start, scaling

        # Normalize so that p | a1, a2;  p^2 | a3, a4;  p^3 | a6.
        for s in range(p):
            if (a1 + 2 * s) % p == 0 and (a2 - s * a1 - s * s) % p == 0:
                break
        else:
            raise ArithmeticError("no s-normalization; algorithm invariant broken")
        if s:
            a = _rst(a, 0, s, 0)
            a1, a2, a3, a4, a6 = a
        p2 = p * p
        p3 = p2 * p
        for t in range(p2):
            if (a3 + 2 * t) % p2 == 0 and (a6 - t * a3 - t * t) % p3 == 0:
                break
        else:
            raise ArithmeticError("no t-normalization; algorithm invariant broken")
        if t:
            a = _rst(a, 0, 0, t)
            a1, a2, a3, a4, a6 = a
        assert a1 % p == 0 and a2 % p == 0 and a4 % p2 == 0

        # Steps 6-7: factorization type of P(T) = T^3 + b T^2 + c T + d mod p.
        b = a2 // p
        c = a4 // p2
        d = a6 // p3
        w = 27 * d * d - b * b * c * c + 4 * b ** 3 * d - 18 * b * c * d + 4 * c ** 3
        x = 3 * c - b * b

        if w % p:
            # distinct roots: I0*
            cp = 1 + _cubic_root_count(b, c, d, p)
            return "I*", 0, n - 4, cp, pass_start, scaling

        if x % p:
            # double root: In* for some n >= 1; translate the double root to 0
            r0 = _cubic_multiple_root(b, c, d, p)
            if r0:
                a = _rst(a, p * r0, 0, 0)
                a1, a2, a3, a4, a6 = a
            ix, iy = 3, 3
            mx, my = p2, p2
            while True:
                assert a2 % p == 0 and a3 % my == 0 and a4 % (p * mx) == 0 and a6 % (mx * my) == 0
                a2t = a2 // p
                a3t = a3 // my
                a4t = a4 // (p * mx)
                a6t = a6 // (mx * my)
                if (a3t * a3t + 4 * a6t) % p == 0:
                    y0 = _quad_root(1, a3t, -a6t, p)
                    if y0:
                        a = _rst(a, 0, 0, my * y0)
                        a1, a2, a3, a4, a6 = a
                    my *= p
                    iy += 1
                    a2t = a2 // p
                    a4t = a4 // (p * mx)
                    a6t = a6 // (mx * my)
                    if (a4t * a4t - 4 * a2t * a6t) % p == 0:
                        x0 = _quad_root(a2t, a4t, a6t, p)
                        if x0:
                            a = _rst(a, mx * x0, 0, 0)
                            a1, a2, a3, a4, a6 = a
                        mx *= p
                        ix += 1
                        continue
                    cp = 4 if _quad_root_count(a2t, a4t, a6t, p) else 2
                else:
                    cp = 4 if _quad_root_count(1, a3t, -a6t, p) else 2
                nn = ix + iy - 5
                return "I*", nn, n - 4 - nn, cp, pass_start, scaling

        # triple root: translate it to 0
        r0 = _cubic_root(b, c, d, p)
        if r0:
            a = _rst(a, p * r0, 0, 0)
            a1, a2, a3, a4, a6 = a
        p4 = p2 * p2

        # Step 8
        assert a3 % p2 == 0 and a6 % p4 == 0
        a3t = a3 // p2
        a6t = a6 // p4
        if (a3t * a3t + 4 * a6t) % p:
            cp = 3 if _quad_root_count(1, a3t, -a6t, p) else 1
            return "IV*", None, n - 6, cp, pass_start, scaling

        # Step 9: kill a3 to order >= 3 (and a6 to order >= 5)
        y0 = _quad_root(1, a3t, -a6t, p)
        if y0:
            a = _rst(a, 0, 0, p2 * y0)
            a1, a2, a3, a4, a6 = a
        if _val(a4, p) < 4:
            return "III*", None, n - 7, 2, pass_start, scaling
        # Step 10
        if _val(a6, p) < 6:
            return "II*", None, n - 8, 1, pass_start, scaling

        # Step 11: non-minimal, rescale ai -> ai / p^i and re-run.
        p6 = p3 * p3
        assert a1 % p == 0 and a2 % p2 == 0 and a3 % p3 == 0 and a4 % p4 == 0 and a6 % p6 == 0
        a = (a1 // p, a2 // p2, a3 // p3, a4 // p4, a6 // p6)
        scaling += 1
        if scaling > max_scaling:
            raise ArithmeticError("rescaling exceeded v(disc)/12 + 1; transcription bug")


def tate(m: WeierstrassModel, p: int) -> LocalData:
    """Full local data of m at the prime p."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    kind, nn, f, c, minimal, scaling = _tate_core(m.coefficients(), p)
    return LocalData(
        p=p,
        kodaira=KodairaType(kind, nn if kind in ("I", "I*") else None),
        conductor_exponent=f,
        tamagawa=c,
        was_minimal=(scaling == 0),
        minimal_model=WeierstrassModel(*minimal),
        scaling_exponent=scaling,
    )


def is_minimal_at(m: WeierstrassModel, p: int) -> bool:
    """True iff m is already p-minimal.  For p >= 5 this is equivalent to
    v_p(disc) < 12 or v_p(c4) < 4 or v_p(c6) < 6."""
    return tate(m, p).was_minimal


def reduction_class(m: WeierstrassModel, p: int) -> str:
    """good / multiplicative / additive, computed on the p-minimal model."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if _val(discriminant(m), p) == 0:
        return "good"
    return tate(m, p).reduction


def bad_primes(m: WeierstrassModel, trial_bound: int = 10 ** 6) -> list:
    """Primes dividing the discriminant, by trial division.  Raises if a
    composite cofactor above the trial bound remains."""
    n = abs(discriminant(m))
    primes = []
    for p in range(2, trial_bound + 1):
        if p * p > n:
            break
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
    if n > 1:
        if not is_prime(n):
            raise ValueError(f"cannot factor discriminant cofactor {n}")
        primes.append(n)
    return primes


def global_conductor(m: WeierstrassModel) -> int:
    """Product of p^f_p over the bad primes.  Convenience only; relies on
    trial-division factorization of the discriminant."""
    N = 1
    for p in bad_primes(m):
        N *= p ** tate(m, p).conductor_exponent
    return N
