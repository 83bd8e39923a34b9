"""Exact rational arithmetic and certified interval enclosures.

Every quantity here is either a `fractions.Fraction` (exact) or an
`Enclosure`, a closed rational interval guaranteed to contain a real value.
Because the endpoints are exact rationals, interval arithmetic needs no
rounding step: endpoint arithmetic is itself exact, so containment is
preserved by construction.  Sign decisions about irrational expressions are
made by shrinking enclosures until zero is excluded; only a true zero ever
reaches the precision floor, and that is reported as Indeterminate rather
than guessed.

No floating point is used anywhere in this module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable

# The canonical exact scalar type.  fractions.Fraction already maintains the
# invariants we need: positive denominator, gcd(num, den) == 1 after every
# operation, arbitrary-precision integers underneath.
Rational = Fraction

# Default refinement schedule: start at 2^-20 and halve per round.  The
# precision floor exists only so that a true equality terminates; every sign
# decision actually exercised by this package resolves far above it.
DEFAULT_EPS_START = Fraction(1, 2**20)
DEFAULT_EPS_FLOOR = Fraction(1, 2**200)


class Sign(enum.Enum):
    """Outcome of a certified sign decision."""

    POSITIVE = 1
    NEGATIVE = -1
    INDETERMINATE = 0


@dataclass(frozen=True)
class Enclosure:
    """Closed interval [lo, hi] with exact rational endpoints.

    Invariant: lo <= hi, and the represented real value r satisfies
    lo <= r <= hi.  All operations return enclosures that contain the exact
    result of the corresponding real operation applied to any reals drawn
    from the operands.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"invalid enclosure: lo={self.lo} > hi={self.hi}")

    @classmethod
    def point(cls, value: Fraction | int) -> Enclosure:
        """Degenerate enclosure of an exactly known rational."""
        v = Fraction(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value: Fraction | int) -> bool:
        return self.lo <= value <= self.hi

    def __add__(self, other: Enclosure) -> Enclosure:
        return Enclosure(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: Enclosure) -> Enclosure:
        return Enclosure(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> Enclosure:
        return Enclosure(-self.hi, -self.lo)

    def __mul__(self, other: Enclosure | Fraction | int) -> Enclosure:
        if isinstance(other, (Fraction, int)):
            return self.scale(Fraction(other))
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Enclosure(min(products), max(products))

    __rmul__ = __mul__

    def scale(self, factor: Fraction | int) -> Enclosure:
        """Exact multiplication by a rational scalar."""
        f = Fraction(factor)
        if f >= 0:
            return Enclosure(self.lo * f, self.hi * f)
        return Enclosure(self.hi * f, self.lo * f)

    def square(self) -> Enclosure:
        """Tight interval square (unlike self * self when 0 is inside)."""
        if self.lo >= 0:
            return Enclosure(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Enclosure(self.hi * self.hi, self.lo * self.lo)
        return Enclosure(Fraction(0), max(self.lo * self.lo, self.hi * self.hi))

    def __repr__(self) -> str:
        return f"Enclosure({self.lo}, {self.hi})"


def enclose_sqrt(q: Fraction | int, eps: Fraction | int) -> Enclosure:
    """Enclosure of sqrt(q) with nonnegative endpoints and width <= eps.

    The bracket is seeded from an integer square root and refined by
    bisection; both steps compare exact rationals, so the soundness
    guarantee lo^2 <= q <= hi^2 holds without any rounding argument.
    Perfect squares (including 0) collapse to a zero-width enclosure.
    """
    q = Fraction(q)
    eps = Fraction(eps)
    if q < 0:
        raise ValueError(f"enclose_sqrt: negative radicand {q}")
    if eps <= 0:
        raise ValueError(f"enclose_sqrt: eps must be positive, got {eps}")
    if q == 0:
        return Enclosure.point(0)

    # sqrt(n/d) = sqrt(n*d)/d, so isqrt(n*d) brackets the root to width 1/d.
    n, d = q.numerator, q.denominator
    s = isqrt(n * d)
    if s * s == n * d:
        return Enclosure.point(Fraction(s, d))
    lo = Fraction(s, d)
    hi = Fraction(s + 1, d)

    while hi - lo > eps:
        mid = (lo + hi) / 2
        if mid * mid <= q:
            lo = mid
        else:
            hi = mid
    return Enclosure(lo, hi)


def sign_with_enclosure(
    value_at: Callable[[Fraction], Enclosure],
    eps_floor: Fraction | int = DEFAULT_EPS_FLOOR,
    eps_start: Fraction | int = DEFAULT_EPS_START,
) -> tuple[Sign, Enclosure]:
    """Certified sign of a real given an enclosure producer.

    `value_at(eps)` must return an enclosure of one fixed real whose width
    shrinks toward zero as eps does.  The request precision is halved per
    round until zero is excluded; if the enclosure width drops below
    `eps_floor` with zero still inside, the answer is Indeterminate together
    with the final (tiny) enclosure as evidence.
    """
    eps = Fraction(eps_start)
    floor = Fraction(eps_floor)
    if eps <= 0 or floor <= 0:
        raise ValueError("eps_start and eps_floor must be positive")
    while True:
        enc = value_at(eps)
        if enc.lo > 0:
            return Sign.POSITIVE, enc
        if enc.hi < 0:
            return Sign.NEGATIVE, enc
        if enc.width < floor:
            return Sign.INDETERMINATE, enc
        eps = eps / 2


def certified_sign(
    value_at: Callable[[Fraction], Enclosure],
    eps_floor: Fraction | int = DEFAULT_EPS_FLOOR,
    eps_start: Fraction | int = DEFAULT_EPS_START,
) -> Sign:
    """Sign-only form of `sign_with_enclosure`."""
    return sign_with_enclosure(value_at, eps_floor, eps_start)[0]
