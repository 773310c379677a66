"""Exact arithmetic for elements of (1/q)Z[beta].

A value is stored as an integer coefficient vector over the power basis
1, beta, ..., beta^(d-1) together with a single positive denominator.
Since beta has degree d, this representation is unique, so zero tests and
equality reduce to plain coefficient checks.  Order queries (floor,
compare) combine the exact zero test with adaptive refinement of a
rational enclosure of beta; refinement starts at 64 fractional bits,
doubles each round, and gives up at 2**16 bits so that a latent
non-termination bug surfaces as a diagnosable error instead of a hang.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import TYPE_CHECKING, Iterator, Sequence

if TYPE_CHECKING:  # pragma: no cover
    from .numeration import BetaBase

PRECISION_START = 64
PRECISION_CAP = 1 << 16


class BaseMismatchError(ValueError):
    """Two elements do not belong to the same base."""


class PrecisionExhaustedError(RuntimeError):
    """Interval refinement hit the hard cap of 2**16 fractional bits."""


def precision_schedule() -> Iterator[int]:
    bits = PRECISION_START
    while bits <= PRECISION_CAP:
        yield bits
        bits *= 2


@dataclass(frozen=True)
class Interval:
    """Closed rational interval enclosing a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class AlgebraicElement:
    """Element of (1/denom)Z[beta] in the power basis of its base."""

    base: "BetaBase"
    coeffs: tuple[int, ...]
    denom: int = 1

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.base.degree:
            raise ValueError(
                f"expected {self.base.degree} coefficients, got {len(self.coeffs)}"
            )
        if self.denom < 1:
            raise ValueError("denominator must be positive")

    def _check_same_base(self, other: "AlgebraicElement") -> None:
        if self.base != other.base:
            raise BaseMismatchError("elements belong to different bases")

    # Arithmetic keeps coefficients exact; no normalisation beyond a
    # common denominator is ever required.
    def __add__(self, other: "AlgebraicElement | int") -> "AlgebraicElement":
        if isinstance(other, int):
            other = self.base.from_integer(other)
        self._check_same_base(other)
        q = lcm(self.denom, other.denom)
        m1, m2 = q // self.denom, q // other.denom
        coeffs = tuple(m1 * a + m2 * b for a, b in zip(self.coeffs, other.coeffs))
        return AlgebraicElement(self.base, coeffs, q)

    def __radd__(self, other: int) -> "AlgebraicElement":
        return self + other

    def __sub__(self, other: "AlgebraicElement | int") -> "AlgebraicElement":
        return self + (-other)

    def __rsub__(self, other: int) -> "AlgebraicElement":
        return (-self) + other

    def __neg__(self) -> "AlgebraicElement":
        return AlgebraicElement(self.base, tuple(-a for a in self.coeffs), self.denom)

    def __mul__(self, n: int) -> "AlgebraicElement":
        if not isinstance(n, int):
            return NotImplemented
        return AlgebraicElement(self.base, tuple(n * a for a in self.coeffs), self.denom)

    def __rmul__(self, n: int) -> "AlgebraicElement":
        return self * n

    def mul_beta(self) -> "AlgebraicElement":
        """Multiply by beta, i.e. apply the companion matrix to the coefficients."""
        c = self.base.coeffs
        a = self.coeffs
        d = self.base.degree
        top = a[d - 1]
        coeffs = (c[0] * top,) + tuple(a[i - 1] + c[i] * top for i in range(1, d))
        return AlgebraicElement(self.base, coeffs, self.denom)

    def normalized(self) -> "AlgebraicElement":
        """Equivalent element with the smallest positive denominator."""
        from math import gcd

        g = self.denom
        for a in self.coeffs:
            g = gcd(g, a)
            if g == 1:
                return self
        return AlgebraicElement(
            self.base, tuple(a // g for a in self.coeffs), self.denom // g
        )

    def value_equals(self, other: "AlgebraicElement") -> bool:
        return is_zero(self - other)


def reduce_power(base: "BetaBase", k: int) -> tuple[int, ...]:
    """Power-basis coefficients of beta**k.

    Computed by k-fold application of the defining recurrence
    X**d = c_{d-1} X**(d-1) + ... + c_0, equivalently the k-th power of
    the companion matrix applied to the first basis vector.
    """
    if k < 0:
        raise ValueError("exponent must be non-negative")
    e = base.from_integer(1)
    for _ in range(k):
        e = e.mul_beta()
    return e.coeffs


def add(e1: AlgebraicElement, e2: AlgebraicElement | int) -> AlgebraicElement:
    return e1 + e2


def sub(e1: AlgebraicElement, e2: AlgebraicElement | int) -> AlgebraicElement:
    return e1 - e2


def scale(e: AlgebraicElement, n: int) -> AlgebraicElement:
    return e * n


def is_zero(e: AlgebraicElement) -> bool:
    """Exact zero test; sound because the power-basis representation is unique."""
    return all(a == 0 for a in e.coeffs)


def _int_bounds(e: AlgebraicElement, bits: int) -> tuple[int, int, int]:
    """Integer bounds (lo_num, hi_num, den) with value in [lo_num/den, hi_num/den].

    Uses the base's cached dyadic enclosures of the powers of beta at
    scale 2**bits, so the hot path stays in plain integer arithmetic.
    """
    bounds = e.base.power_bounds(bits)
    lo = hi = 0
    for a, (bl, bh) in zip(e.coeffs, bounds):
        if a >= 0:
            lo += a * bl
            hi += a * bh
        else:
            lo += a * bh
            hi += a * bl
    return lo, hi, e.denom << bits


def enclose(e: AlgebraicElement, precision: int) -> Interval:
    """Rational enclosure of the value of e with width <= 2**-precision."""
    for bits in precision_schedule():
        lo, hi, den = _int_bounds(e, bits)
        if (hi - lo) << precision <= den:
            return Interval(Fraction(lo, den), Fraction(hi, den))
    raise PrecisionExhaustedError(
        f"enclosure of width 2**-{precision} not reached within {PRECISION_CAP} bits"
    )


def is_rational(e: AlgebraicElement) -> bool:
    return all(a == 0 for a in e.coeffs[1:])


def floor_of(e: AlgebraicElement) -> int:
    """Exact floor of the value of e.

    Rational elements (all higher coefficients zero) are floored by
    integer division.  Irrational elements are bounded away from every
    integer, so interval refinement terminates.
    """
    if is_rational(e):
        return e.coeffs[0] // e.denom
    for bits in precision_schedule():
        lo, hi, den = _int_bounds(e, bits)
        fl, fh = lo // den, hi // den
        if fl == fh:
            return fl
    raise PrecisionExhaustedError("floor undecided at the precision cap")


def compare(e1: AlgebraicElement, e2: AlgebraicElement) -> int:
    """Exact trichotomy: -1, 0, or 1 as e1 <, =, > e2."""
    e1._check_same_base(e2)
    diff = e1 - e2
    if is_zero(diff):
        return 0
    if is_rational(diff):
        return 1 if diff.coeffs[0] > 0 else -1
    for bits in precision_schedule():
        lo, hi, _ = _int_bounds(diff, bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
    raise PrecisionExhaustedError("sign undecided at the precision cap")
