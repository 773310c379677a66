"""Beta-numeration: bases, greedy expansions, orbits and admissibility.

A base is a monic integer polynomial x^d - c_{d-1}x^{d-1} - ... - c_0
whose largest real root beta exceeds 1.  The root is isolated exactly by
Sturm counts and bisection over rationals, so every later floor/compare
is certified.  Fractional digits come from the map x -> beta*x - floor(beta*x)
acting on exact coefficient vectors; a repeat of the state vector closes
the period, and the first repeat yields the minimal one.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, gcd, lcm
from typing import Iterable, Sequence

from .algebra import (
    AlgebraicElement,
    compare,
    floor_of,
    is_zero,
)

DEFAULT_ORBIT_CAP = 10_000_000
_DSTAR_CAP = 4096
_APERIODIC_MARGIN = 64


class NoDominantRootError(ValueError):
    """The polynomial has no real root greater than 1."""


class InadmissibleDigitsError(ValueError):
    """A digit string violates the lexicographic admissibility condition."""


class CapExhaustedError(RuntimeError):
    """Orbit iteration ran out of steps without closing a cycle."""

    def __init__(self, steps: int, digits: tuple[int, ...]):
        super().__init__(f"no state repeat within {steps} steps")
        self.steps = steps
        self.digits = digits


# ---------------------------------------------------------------------------
# Exact polynomial helpers (dense, low-to-high coefficients).

def _peval(poly: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def _pderiv(poly: Sequence[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(poly)][1:]


def _ptrim(poly: list[Fraction]) -> list[Fraction]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _prem(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a = _ptrim(list(a))
    db, lb = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        factor = a[-1] / lb
        for i in range(db + 1):
            a[shift + i] -= factor * b[i]
        _ptrim(a)
    return a


def _pgcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _prem(a, b)
    lead = a[-1]
    return [c / lead for c in a]


def _squarefree(poly: Sequence[Fraction]) -> list[Fraction]:
    g = _pgcd(list(poly), _pderiv(poly))
    if len(g) == 1:
        return list(poly)
    rem = _ptrim(list(poly))
    dg = len(g) - 1
    quot = [Fraction(0)] * (len(rem) - dg)
    while rem and len(rem) - 1 >= dg:
        shift = len(rem) - 1 - dg
        factor = rem[-1] / g[-1]
        quot[shift] = factor
        for i in range(dg + 1):
            rem[shift + i] -= factor * g[i]
        _ptrim(rem)
    return quot


def _sturm_chain(poly: Sequence[Fraction]) -> list[list[Fraction]]:
    chain = [_ptrim(list(poly)), _ptrim(_pderiv(poly))]
    while chain[-1]:
        chain.append([-c for c in _prem(chain[-2], chain[-1])])
    chain.pop()
    return chain


def _variations(chain: Sequence[Sequence[Fraction]], x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = _peval(poly, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s1, s2 in zip(signs, signs[1:]) if s1 != s2)


def _count_roots(chain, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


def _integer_root_candidates(coeffs: tuple[int, ...]) -> list[int]:
    # Monic integer polynomial: rational roots are integers dividing c0.
    c0 = abs(coeffs[0])
    out = []
    for r in range(2, c0 + 1):
        if c0 % r == 0:
            out.append(r)
    return out


def _isolate_dominant(coeffs: tuple[int, ...]) -> tuple[Fraction, Fraction, list[Fraction]]:
    """Isolating interval for the largest real root > 1.

    Returns (lo, hi, squarefree_poly); the interval is (lo, hi] with
    exactly one root, and either lo == hi (exact rational root) or the
    squarefree polynomial changes sign between the endpoints.
    """
    f = [Fraction(-c) for c in coeffs] + [Fraction(1)]
    g = _squarefree(f)
    chain = _sturm_chain(g)
    bound = Fraction(1 + max(abs(c) for c in coeffs))
    lo, hi = Fraction(1), bound
    total = _count_roots(chain, lo, hi)
    if total == 0:
        raise NoDominantRootError("polynomial has no real root greater than 1")
    while _count_roots(chain, lo, hi) > 1:
        mid = (lo + hi) / 2
        if _count_roots(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    for r in _integer_root_candidates(coeffs):
        if lo < r <= hi and _peval(g, Fraction(r)) == 0:
            return Fraction(r), Fraction(r), g
    # Drive endpoints off roots so that the sign-change invariant holds.
    while _peval(g, hi) == 0 or _peval(g, lo) == 0 or (
        (_peval(g, lo) > 0) == (_peval(g, hi) > 0)
    ):
        mid = (lo + hi) / 2
        if _peval(g, mid) == 0:
            return mid, mid, g
        if _count_roots(chain, mid, hi) == 1:
            lo = mid
        else:
            hi = mid
    return lo, hi, g


# ---------------------------------------------------------------------------
# Pisot certification: map the open unit disk to the right half-plane with
# z = (s-1)/(s+1) and count right-half-plane roots by an exact Routh table.
# The base is flagged Pisot when all d-1 non-dominant roots land there.

def _ipmul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _cayley_numerator(coeffs: tuple[int, ...]) -> list[int]:
    d = len(coeffs)
    minus = [[1]]
    plus = [[1]]
    for _ in range(d):
        minus.append(_ipmul(minus[-1], [-1, 1]))
        plus.append(_ipmul(plus[-1], [1, 1]))
    out = list(minus[d])
    for i, c in enumerate(coeffs):
        term = _ipmul(minus[i], plus[d - i])
        for j, t in enumerate(term):
            out[j] -= c * t
    return out


def _routh_rhp_count(poly: Sequence[int]) -> int | None:
    coeffs = [Fraction(c) for c in reversed(poly)]
    if not coeffs or coeffs[0] == 0:
        return None
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    n = len(coeffs) - 1
    if n == 0:
        return 0
    r_prev = coeffs[0::2]
    r_cur = coeffs[1::2]
    first = [r_prev[0]]
    for _ in range(n - 1):
        if not r_cur or r_cur[0] == 0:
            return None
        first.append(r_cur[0])
        nxt = []
        for j in range(len(r_prev) - 1):
            a = r_prev[j + 1]
            b = r_cur[j + 1] if j + 1 < len(r_cur) else Fraction(0)
            nxt.append((r_cur[0] * a - r_prev[0] * b) / r_cur[0])
        r_prev, r_cur = r_cur, nxt
    if not r_cur or r_cur[0] == 0:
        return None
    first.append(r_cur[0])
    return sum(1 for s1, s2 in zip(first, first[1:]) if (s1 > 0) != (s2 > 0))


def _pisot_flag(coeffs: tuple[int, ...]) -> bool | None:
    d = len(coeffs)
    if d > 4:
        return None
    if d == 1:
        return True
    f = [Fraction(-c) for c in coeffs] + [Fraction(1)]
    if _peval(f, Fraction(1)) == 0 or _peval(f, Fraction(-1)) == 0:
        return False
    count = _routh_rhp_count(_cayley_numerator(coeffs))
    if count is None:
        return None
    return count == d - 1


PURITY_ALL = "all-rationals-pure"
PURITY_COPRIME = "coprime-to-norm-pure"
PURITY_NONE = "none-pure"
PURITY_UNKNOWN = "unknown"


def _purity_class(coeffs: tuple[int, ...]) -> str:
    d = len(coeffs)
    if d == 1:
        # Integer base b: p/q is purely periodic exactly when gcd(q, b) = 1.
        return PURITY_COPRIME
    if d == 2:
        c0, c1 = coeffs
        if c0 == 1 and c1 >= 1:
            return PURITY_ALL
        if c0 == -1 and c1 >= 3:
            return PURITY_NONE
        if c0 >= 1 and c1 >= c0:
            return PURITY_COPRIME
    return PURITY_UNKNOWN


# ---------------------------------------------------------------------------

class BetaBase:
    """A beta-numeration base with certified root enclosure and metadata.

    The supplied coefficients are assumed to be those of the minimal
    polynomial of beta; uniqueness of the power-basis representation
    (hence exactness of zero tests) depends on that.
    """

    def __init__(self, coeffs: tuple[int, ...], lo: Fraction, hi: Fraction,
                 sqfree: list[Fraction], digit_max: int,
                 pisot_flag: bool | None, purity_class: str):
        self.coeffs = coeffs
        self.degree = len(coeffs)
        self.digit_max = digit_max
        self.unit_flag = abs(coeffs[0]) == 1
        self.pisot_flag = pisot_flag
        self.purity_class = purity_class
        self._lo = lo
        self._hi = hi
        self._sqfree = sqfree
        self._sign_lo = 1 if _peval(sqfree, lo) > 0 else -1
        self._lock = threading.Lock()
        self._power_cache: dict[int, tuple[tuple[int, int], ...]] = {}
        self._dstar_head: tuple[int, ...] = ()
        self._dstar_period: tuple[int, ...] | None = None
        self._dstar_resolved = False
        self._dstar_started = False

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BetaBase) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"BetaBase({self.polynomial_str()})"

    def polynomial_str(self) -> str:
        d = self.degree
        parts = ["x" if d == 1 else f"x^{d}"]
        for i in range(d - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c > 0 else "+"
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "x" if mag == 1 else f"{mag}*x"
            else:
                term = f"x^{i}" if mag == 1 else f"{mag}*x^{i}"
            parts.append(f"{sign} {term}")
        return " ".join(parts)

    # -- element constructors ------------------------------------------------
    def element(self, coeffs: Sequence[int], denom: int = 1) -> AlgebraicElement:
        return AlgebraicElement(self, tuple(int(c) for c in coeffs), denom)

    def from_integer(self, n: int) -> AlgebraicElement:
        return self.element((n,) + (0,) * (self.degree - 1))

    def from_rational(self, x: Fraction) -> AlgebraicElement:
        x = Fraction(x)
        return self.element((x.numerator,) + (0,) * (self.degree - 1), x.denominator)

    def power_element(self, k: int) -> AlgebraicElement:
        e = self.from_integer(1)
        for _ in range(k):
            e = e.mul_beta()
        return e

    # -- certified enclosure of beta ------------------------------------------
    def _refine_locked(self, bits: int) -> None:
        eps = Fraction(1, 1 << bits)
        while self._hi - self._lo > eps:
            mid = (self._lo + self._hi) / 2
            v = _peval(self._sqfree, mid)
            if v == 0:
                self._lo = self._hi = mid
                return
            if (1 if v > 0 else -1) == self._sign_lo:
                self._lo = mid
            else:
                self._hi = mid

    def beta_interval(self, bits: int = 64):
        from .algebra import Interval

        with self._lock:
            self._refine_locked(bits)
            return Interval(self._lo, self._hi)

    def power_bounds(self, bits: int) -> tuple[tuple[int, int], ...]:
        """Dyadic bounds (lo, hi) for beta^i at scale 2**bits, i < degree."""
        with self._lock:
            cached = self._power_cache.get(bits)
            if cached is not None:
                return cached
            self._refine_locked(bits)
            scale = 1 << bits
            lo, hi = self._lo, self._hi
            low = (lo.numerator * scale) // lo.denominator
            high = -((-hi.numerator * scale) // hi.denominator)
            bounds = [(scale, scale)]
            for _ in range(1, self.degree):
                pl, ph = bounds[-1]
                bounds.append(((pl * low) >> bits, (ph * high + scale - 1) >> bits))
            result = tuple(bounds)
            self._power_cache[bits] = result
            return result

    # -- quasigreedy expansion of 1 -------------------------------------------
    def _greedy_one(self, cap: int) -> tuple[list[int], str, int]:
        """Greedy digits of 1; the first digit may be floor(beta) itself."""
        x = self.from_integer(1)
        seen: dict[tuple[int, ...], int] = {}
        digits: list[int] = []
        while len(digits) < cap:
            if is_zero(x):
                return digits, "zero", 0
            hit = seen.get(x.coeffs)
            if hit is not None:
                return digits, "cycle", hit
            seen[x.coeffs] = len(digits)
            y = x.mul_beta()
            t = floor_of(y)
            digits.append(t)
            x = y - t
        return digits, "open", 0

    def _dstar_need(self, n: int) -> tuple[tuple[int, ...], tuple[int, ...] | None]:
        with self._lock:
            if self._dstar_resolved or (self._dstar_started and len(self._dstar_head) >= n):
                return self._dstar_head, self._dstar_period
            cap = max(_DSTAR_CAP, n + 1)
            digits, kind, start = self._greedy_one(cap)
            self._dstar_started = True
            if kind == "zero":
                # Finite d(1) = t1..tm rewrites to (t1..t_{m-1}(tm-1))^omega.
                self._dstar_head = ()
                self._dstar_period = tuple(digits[:-1]) + (digits[-1] - 1,)
                self._dstar_resolved = True
            elif kind == "cycle":
                self._dstar_head = tuple(digits[:start])
                self._dstar_period = tuple(digits[start:])
                self._dstar_resolved = True
            else:
                self._dstar_head = tuple(digits)
                self._dstar_period = None
            return self._dstar_head, self._dstar_period

    def dstar_prefix(self, n: int) -> tuple[int, ...]:
        head, period = self._dstar_need(n)
        if period is None:
            return head[:n]
        return tuple(_stream_digit(head, period, i) for i in range(n))


def make_base(coeffs: Iterable[int]) -> BetaBase:
    """Build a base from the low-order coefficients (c0, ..., c_{d-1})
    of the monic polynomial x^d - c_{d-1}x^{d-1} - ... - c_0.
    """
    tup = tuple(int(c) for c in coeffs)
    if not tup:
        raise ValueError("at least one coefficient is required")
    if tup[0] == 0:
        raise ValueError("zero constant term")
    lo, hi, sqfree = _isolate_dominant(tup)
    base = BetaBase(tup, lo, hi, sqfree, digit_max=1,
                    pisot_flag=_pisot_flag(tup), purity_class=_purity_class(tup))
    base.digit_max = _digit_max(base)
    return base


def _digit_max(base: BetaBase) -> int:
    from .algebra import precision_schedule, PrecisionExhaustedError

    with base._lock:
        if base._lo == base._hi:
            return ceil(base._lo) - 1
    for bits in precision_schedule():
        with base._lock:
            base._refine_locked(bits)
            lo, hi = base._lo, base._hi
        if lo == hi:
            return ceil(lo) - 1
        if ceil(lo) == ceil(hi):
            return ceil(lo) - 1
    raise PrecisionExhaustedError("ceiling of beta undecided; is the polynomial minimal?")


# ---------------------------------------------------------------------------
# Digit sequences and eventually periodic digit streams.

def digits_to_str(digits: Sequence[int], digit_max: int = 9) -> str:
    """Serialize digits: plain characters when the alphabet fits 0..9,
    comma-separated decimal integers otherwise."""
    if digit_max <= 9:
        return "".join(str(t) for t in digits)
    return ",".join(str(t) for t in digits)


def digits_from_str(s: str, digit_max: int = 9) -> tuple[int, ...]:
    if not s:
        return ()
    if digit_max <= 9:
        return tuple(int(ch) for ch in s)
    return tuple(int(part) for part in s.split(","))


def _stream_digit(head: Sequence[int], period: Sequence[int], i: int) -> int:
    if i < len(head):
        return head[i]
    if not period:
        return 0
    return period[(i - len(head)) % len(period)]


def _stream_cmp(ah, ap, bh, bp) -> int:
    """Exact lexicographic comparison of eventually periodic streams.

    A tail of () means zeros forever.  Agreement through
    len(ah)+len(bh)+lcm of the period lengths implies equality.
    """
    bound = len(ah) + len(bh) + lcm(len(ap) or 1, len(bp) or 1) + 1
    for i in range(bound):
        da = _stream_digit(ah, ap, i)
        db = _stream_digit(bh, bp, i)
        if da != db:
            return -1 if da < db else 1
    return 0


def _below_dstar(base: BetaBase, head, period) -> bool:
    """Strict lexicographic comparison of a digit stream against d*(1)."""
    need = len(head) + len(period) + _APERIODIC_MARGIN
    dh, dp = base._dstar_need(need)
    if dp is not None:
        return _stream_cmp(head, period, dh, dp) < 0
    # d*(1) did not close within the cap: compare on the known prefix and
    # treat a full-length tie as admissible.
    for i in range(len(dh)):
        da = _stream_digit(head, period, i)
        if da != dh[i]:
            return da < dh[i]
    return True


def is_admissible(digits: Sequence[int], base: BetaBase) -> bool:
    """Parry condition for a finite word (implicitly followed by zeros):
    every suffix must be lexicographically below d*(1)."""
    digits = tuple(digits)
    if any(t < 0 or t > base.digit_max for t in digits):
        return False
    return all(_below_dstar(base, digits[i:], ()) for i in range(len(digits)))


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Expansion:
    """Digit blocks of a beta-expansion, with the source fraction kept for
    provenance.  An empty period with truncated=False means the expansion
    terminates; truncated=True means the cap ran out before a repeat."""

    integer_part: tuple[int, ...]
    preperiod: tuple[int, ...]
    period: tuple[int, ...]
    source_num: int
    source_den: int
    truncated: bool = False

    @property
    def is_purely_periodic(self) -> bool:
        return (not self.truncated and bool(self.period)
                and not self.preperiod and all(t == 0 for t in self.integer_part))

    @property
    def is_finite(self) -> bool:
        return not self.truncated and not self.period

    def fractional_prefix(self, n: int) -> tuple[int, ...]:
        return tuple(_stream_digit(self.preperiod, self.period, i) for i in range(n))

    def format_text(self, digit_max: int = 9) -> str:
        int_s = digits_to_str(self.integer_part or (0,), digit_max)
        pre_s = digits_to_str(self.preperiod, digit_max)
        per_s = digits_to_str(self.period, digit_max)
        if self.truncated:
            return f"{int_s}.{pre_s}..."
        if self.period:
            return f"{int_s}.{pre_s}({per_s})"
        if self.preperiod:
            return f"{int_s}.{pre_s}"
        return int_s


def expansion_is_admissible(exp: Expansion, base: BetaBase) -> bool:
    head = exp.integer_part + exp.preperiod
    period = exp.period
    if any(t < 0 or t > base.digit_max for t in head + period):
        return False
    if exp.truncated:
        return is_admissible(head, base)
    for i in range(len(head)):
        if not _below_dstar(base, head[i:], period):
            return False
    for j in range(len(period)):
        if not _below_dstar(base, (), period[j:] + period[:j]):
            return False
    return True


@dataclass(frozen=True)
class OrbitState:
    """State of the digit map T: an element of [0, 1) plus its step index."""

    element: AlgebraicElement
    index: int = 0


def _t_step_raw(el: AlgebraicElement) -> tuple[int, AlgebraicElement]:
    y = el.mul_beta()
    digit = floor_of(y)
    coeffs = (y.coeffs[0] - digit * y.denom,) + y.coeffs[1:]
    return digit, AlgebraicElement(el.base, coeffs, y.denom)


def t_step(state: OrbitState) -> tuple[int, OrbitState]:
    """One application of x -> beta*x - floor(beta*x), exactly.

    The new coefficient vector is the companion-matrix image of the old
    one minus q*digit on the constant coordinate.
    """
    el = state.element
    if not is_zero(el) and floor_of(el) != 0:
        raise ValueError("orbit state must lie in [0, 1)")
    digit, nxt = _t_step_raw(el)
    return digit, OrbitState(nxt, state.index + 1)


def _fractional_orbit(el: AlgebraicElement, cap: int):
    """Iterate the digit map until the state vector repeats or vanishes.

    Returns (preperiod, period).  The denominator never changes along the
    orbit, so the coefficient tuple is already a canonical state key.
    """
    digits: list[int] = []
    seen: dict[tuple[int, ...], int] = {}
    x = el
    while len(digits) < cap:
        if is_zero(x):
            return tuple(digits), ()
        hit = seen.get(x.coeffs)
        if hit is not None:
            return tuple(digits[:hit]), tuple(digits[hit:])
        seen[x.coeffs] = len(digits)
        d, x = _t_step_raw(x)
        digits.append(d)
    raise CapExhaustedError(cap, tuple(digits))


def orbit_expansion(p: int, q: int, base: BetaBase,
                    cap: int = DEFAULT_ORBIT_CAP) -> Expansion:
    """Expansion of p/q in (0,1) with exact minimal-period detection.

    gcd(p, q) > 1 is tolerated here (the state space simply embeds into
    denominator q); the Midy deciders enforce coprimality themselves.
    """
    if not 0 < p < q:
        raise ValueError("need 0 < p < q")
    if cap < 1:
        raise ValueError("cap must be positive")
    el = base.element((p,) + (0,) * (base.degree - 1), q)
    preperiod, period = _fractional_orbit(el, cap)
    return Expansion((0,), preperiod, period, p, q)


def greedy_expand(x, base: BetaBase, frac_digits: int = 4096) -> Expansion:
    """Greedy expansion of a non-negative rational.

    Integer digits follow the descending greedy loop with exact
    comparisons; fractional digits come from the orbit of the remainder,
    with period detection when the state vector repeats and truncation at
    frac_digits otherwise.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError("x must be non-negative")
    if x == 0:
        return Expansion((0,), (), (), 0, 1)
    e = base.from_rational(x)
    one = base.from_integer(1)
    if compare(e, one) < 0:
        int_digits: tuple[int, ...] = (0,)
        rem = e
    else:
        powers = [one]
        while compare(powers[-1].mul_beta(), e) <= 0:
            powers.append(powers[-1].mul_beta())
        digits = []
        rem = e
        for p_el in reversed(powers):
            t = 0
            acc = rem
            while t < base.digit_max + 1:
                nxt = acc - p_el
                if compare(nxt, base.from_integer(0)) < 0:
                    break
                acc = nxt
                t += 1
            digits.append(t)
            rem = acc
        int_digits = tuple(digits)
    try:
        preperiod, period = _fractional_orbit(rem, frac_digits)
        truncated = False
    except CapExhaustedError as exc:
        preperiod, period, truncated = exc.digits, (), True
    return Expansion(int_digits, preperiod, period, x.numerator, x.denominator,
                     truncated=truncated)


def quasigreedy_one(base: BetaBase, n: int) -> tuple[int, ...]:
    """First n digits of the quasigreedy expansion of 1.

    A finite greedy expansion t1..tm of 1 rewrites to the periodic stream
    (t1..t_{m-1}(tm-1))^omega; otherwise the greedy digits themselves are
    returned.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return base.dstar_prefix(n)


def _digits_value(digits: Sequence[int], base: BetaBase) -> AlgebraicElement:
    e = base.from_integer(0)
    for t in digits:
        e = e.mul_beta() + t
    return e


def beta_integer_from_digits(digits: Sequence[int], base: BetaBase) -> AlgebraicElement:
    """Value of a digit block read as a beta-integer (most significant first)."""
    digits = tuple(digits)
    if not is_admissible(digits, base):
        raise InadmissibleDigitsError(
            f"digit block {digits_to_str(digits, base.digit_max)!r} is not admissible"
        )
    return _digits_value(digits, base)


def greedy_element_digits(e: AlgebraicElement, base: BetaBase) -> tuple[int, ...]:
    """Greedy digit block of a beta-integer element (value >= 0)."""
    zero = base.from_integer(0)
    sign = compare(e, zero)
    if sign < 0:
        raise ValueError("element must be non-negative")
    if sign == 0:
        return (0,)
    powers = [base.from_integer(1)]
    while compare(powers[-1].mul_beta(), e) <= 0:
        powers.append(powers[-1].mul_beta())
    digits = []
    rem = e
    for p_el in reversed(powers):
        t = 0
        while True:
            nxt = rem - p_el
            if compare(nxt, zero) < 0:
                break
            rem = nxt
            t += 1
        digits.append(t)
    if not is_zero(rem):
        raise ValueError("element is not a beta-integer")
    return tuple(digits)


def verify_reconstruction(p: int, q: int, exp: Expansion, base: BetaBase) -> bool:
    """Check the exact identity tying p/q to its digit blocks in Z[beta].

    For a purely periodic expansion with period value P and length m this
    is p*(beta^m - 1) = q*P; preperiods and integer parts enter through
    the shifted variant.  Verification is an is_zero test, so a single
    corrupted digit is always caught.
    """
    if exp.truncated:
        raise ValueError("cannot verify a truncated expansion")

    def shift(e: AlgebraicElement, k: int) -> AlgebraicElement:
        for _ in range(k):
            e = e.mul_beta()
        return e

    u = len(exp.preperiod)
    m = len(exp.period)
    head_val = _digits_value(exp.integer_part, base)
    pre_val = _digits_value(exp.preperiod, base)
    per_val = _digits_value(exp.period, base)
    combined = shift(head_val, u) + pre_val
    p_el = base.from_integer(p)
    if m:
        lhs = shift(p_el, u + m) - shift(p_el, u)
        rhs = (shift(combined, m) - combined + per_val) * q
    else:
        lhs = shift(p_el, u)
        rhs = combined * q
    return is_zero(lhs - rhs)
