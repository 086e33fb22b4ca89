"""Exact arithmetic for grid geometry.

Two number types cover everything this package needs:

* :class:`Scalar` — elements of the field Q(sqrt(2)), written ``r + s2*sqrt(2)``
  with rational ``r`` and ``s2``.  Every vertex coordinate lives here, so all
  intersection and incidence tests are exact.
* :class:`RadicalSum` — finite sums ``sum(c_d * sqrt(d))`` over square-free
  integers ``d`` (``d == 1`` holding the rational part).  Segment lengths and
  their totals live here.

``Rational`` is the standard-library :class:`fractions.Fraction`; nothing in
this module ever rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from math import isqrt
from typing import Union

from .errors import DomainError, UnsupportedRadicalError

Rational = Fraction

RationalLike = Union[int, Fraction]
ScalarLike = Union[int, Fraction, "Scalar"]

# Trial-division bound for square-free decomposition.  A cofactor with no
# prime factor below this bound and below _SQUAREFREE_CERTAIN has at most two
# prime factors, so if it is not a perfect square it is square-free.
_TRIAL_BOUND = 10_000
_SQUAREFREE_CERTAIN = 10**12


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


@total_ordering
class Scalar:
    """An exact element ``r + s2*sqrt(2)`` of Q(sqrt(2)).

    Supports field arithmetic, exact total ordering, hashing consistent with
    plain rationals, and exact floor/ceil.  Construct with rational parts::

        Scalar(3)                 # the rational 3
        Scalar(Fraction(1, 2), 1) # 1/2 + sqrt(2)
    """

    __slots__ = ("r", "s2")

    def __init__(self, r: RationalLike = 0, s2: RationalLike = 0):
        self.r = _as_fraction(r)
        self.s2 = _as_fraction(s2)

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def coerce(x: ScalarLike) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return Scalar(x)

    @property
    def is_rational(self) -> bool:
        return self.s2 == 0

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.coerce(other)
        return Scalar(self.r + o.r, self.s2 + o.s2)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.coerce(other)
        return Scalar(self.r - o.r, self.s2 - o.s2)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.coerce(other)
        return Scalar(self.r * o.r + 2 * self.s2 * o.s2, self.r * o.s2 + self.s2 * o.r)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.coerce(other)
        norm = o.r * o.r - 2 * o.s2 * o.s2
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(2))")
        # multiply by the conjugate (o.r - o.s2*sqrt(2)) / norm
        return Scalar(
            (self.r * o.r - 2 * self.s2 * o.s2) / norm,
            (self.s2 * o.r - self.r * o.s2) / norm,
        )

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        return Scalar.coerce(other) / self

    def __neg__(self) -> "Scalar":
        return Scalar(-self.r, -self.s2)

    def __abs__(self) -> "Scalar":
        return -self if self < 0 else self

    def __pow__(self, exponent: int) -> "Scalar":
        if not isinstance(exponent, int) or exponent < 0:
            raise TypeError("only non-negative integer powers are supported")
        out = Scalar(1)
        for _ in range(exponent):
            out = out * self
        return out

    # -- ordering ---------------------------------------------------------

    def _sign(self) -> int:
        """Exact sign of ``r + s2*sqrt(2)``."""
        r, s = self.r, self.s2
        if s == 0:
            return (r > 0) - (r < 0)
        if r == 0:
            return 1 if s > 0 else -1
        if r > 0 and s > 0:
            return 1
        if r < 0 and s < 0:
            return -1
        # Mixed signs: compare |r| with |s|*sqrt(2) by squaring.
        if r > 0:  # s < 0: positive iff r^2 > 2 s^2
            return 1 if r * r > 2 * s * s else -1
        return 1 if 2 * s * s > r * r else -1  # r < 0 < s

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.r == other.r and self.s2 == other.s2
        if isinstance(other, (int, Fraction)):
            return self.s2 == 0 and self.r == other
        return NotImplemented

    def __lt__(self, other: ScalarLike) -> bool:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return (self - other)._sign() < 0

    def __hash__(self) -> int:
        # Agree with the numeric hash when the value is rational, so Scalars
        # and Fractions can share dictionary keys.
        if self.s2 == 0:
            return hash(self.r)
        return hash((self.r, self.s2))

    # -- conversions ------------------------------------------------------

    def __float__(self) -> float:
        return float(self.r) + float(self.s2) * math.sqrt(2)

    def __floor__(self) -> int:
        if self.s2 == 0:
            return math.floor(self.r)
        m = math.floor(float(self))
        while self < m:
            m -= 1
        while self >= m + 1:
            m += 1
        return m

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def __repr__(self) -> str:
        return f"Scalar({self.r!r}, {self.s2!r})"

    def __str__(self) -> str:
        if self.s2 == 0:
            return str(self.r)
        if self.r == 0:
            return f"{self.s2}*sqrt(2)"
        sign = "+" if self.s2 > 0 else "-"
        return f"{self.r} {sign} {abs(self.s2)}*sqrt(2)"


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)


def square_free_decompose(m: int) -> tuple[int, int]:
    """Write ``m = s*s * d`` with ``d`` square-free; return ``(s, d)``.

    Uses trial division up to a fixed bound.  A remaining cofactor that is
    neither 1 nor a perfect square is certified square-free only while it
    stays below 10**12 (it can then have at most two prime factors, each
    above the trial bound); beyond that an
    :class:`~gridlink.errors.UnsupportedRadicalError` is raised instead of
    guessing.
    """
    if m <= 0:
        raise DomainError(f"square_free_decompose needs a positive integer, got {m}")
    s, d = 1, 1
    p = 2
    while p <= _TRIAL_BOUND and p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    if m == 1:
        return s, d
    root = isqrt(m)
    if root * root == m:
        return s * root, d
    if m <= _SQUAREFREE_CERTAIN:
        return s, d * m
    raise UnsupportedRadicalError(
        f"cannot certify the square-free part of {m}: cofactor too large to factor"
    )


def _rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of ``q`` if it is the square of a rational, else None."""
    if q < 0:
        return None
    np, dp = q.numerator, q.denominator
    rn, rd = isqrt(np), isqrt(dp)
    if rn * rn == np and rd * rd == dp:
        return Fraction(rn, rd)
    return None


def sqrt_rational_exact(q: RationalLike) -> "RadicalSum":
    """Exact ``sqrt(q)`` for a non-negative rational, as a RadicalSum.

    ``sqrt(p/q) == sqrt(p*q) / q``; the integer radicand is reduced to its
    square-free part.
    """
    q = _as_fraction(q)
    if q < 0:
        raise DomainError(f"square root of a negative rational: {q}")
    if q == 0:
        return RadicalSum()
    s, d = square_free_decompose(q.numerator * q.denominator)
    return RadicalSum({d: Fraction(s, q.denominator)})


def sqrt_scalar(value: Scalar) -> "RadicalSum":
    """Exact square root of a non-negative Q(sqrt(2)) element.

    Two shapes are representable: purely rational radicands reduce through
    :func:`sqrt_rational_exact`, and radicands whose root lies back in
    Q(sqrt(2)) are recovered by solving ``(u + v*sqrt(2))**2 = value`` for
    rational ``u, v``.  Anything else raises
    :class:`~gridlink.errors.UnsupportedRadicalError` — the caller gets a
    refusal, never an approximation.
    """
    value = Scalar.coerce(value)
    if value._sign() < 0:
        raise DomainError(f"square root of a negative value: {value}")
    if value.s2 == 0:
        return sqrt_rational_exact(value.r)
    r, s = value.r, value.s2
    # (u + v*sqrt(2))^2 = u^2 + 2 v^2 + 2uv*sqrt(2)  =>  u^2 + 2 v^2 = r, 2uv = s.
    # Eliminating u gives v^2 = (r ± sqrt(r^2 - 2 s^2)) / 4.
    disc = _rational_sqrt(r * r - 2 * s * s)
    if disc is not None:
        for branch in (disc, -disc):
            v = _rational_sqrt((r + branch) / 4)
            if v is None or v == 0:
                continue
            u = s / (2 * v)
            if u * u + 2 * v * v == r:
                root = Scalar(u, v)
                if root._sign() < 0:
                    root = -root
                return RadicalSum.from_scalar(root)
    raise UnsupportedRadicalError(
        f"sqrt({value}) does not lie in the supported radical forms"
    )


def _sqrt_bounds(d: int, prec: int) -> tuple[Fraction, Fraction]:
    """Rational bounds ``lo <= sqrt(d) < hi`` with ``hi - lo == 10**-prec``."""
    scale = 10**prec
    lo = isqrt(d * scale * scale)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


@total_ordering
class RadicalSum:
    """A finite sum of rational multiples of square roots of square-free ints.

    The term map sends each square-free radicand ``d`` to its coefficient;
    ``d == 1`` is the rational part.  Square roots of distinct square-free
    integers are linearly independent over the rationals, so the term map is
    a canonical form: equality is dictionary equality, and ordering of
    unequal values is decided by refining rational enclosures of each root
    until the sign of the difference is determined.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, RationalLike] | None = None):
        clean: dict[int, Fraction] = {}
        for d, c in (terms or {}).items():
            c = _as_fraction(c)
            if c == 0:
                continue
            s, df = square_free_decompose(d)
            clean[df] = clean.get(df, Fraction(0)) + c * s
        self._terms = {d: c for d, c in clean.items() if c != 0}

    @staticmethod
    def from_scalar(x: ScalarLike) -> "RadicalSum":
        x = Scalar.coerce(x)
        return RadicalSum({1: x.r, 2: x.s2})

    @staticmethod
    def coerce(x: "RadicalSumLike") -> "RadicalSum":
        if isinstance(x, RadicalSum):
            return x
        return RadicalSum.from_scalar(x)

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def is_rational(self) -> bool:
        return all(d == 1 for d in self._terms)

    def rational_part(self) -> Fraction:
        return self._terms.get(1, Fraction(0))

    def coefficient(self, d: int) -> Fraction:
        return self._terms.get(d, Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "RadicalSumLike") -> "RadicalSum":
        o = RadicalSum.coerce(other)
        out = dict(self._terms)
        for d, c in o._terms.items():
            out[d] = out.get(d, Fraction(0)) + c
        return RadicalSum(out)

    __radd__ = __add__

    def __sub__(self, other: "RadicalSumLike") -> "RadicalSum":
        return self + (-RadicalSum.coerce(other))

    def __rsub__(self, other: "RadicalSumLike") -> "RadicalSum":
        return RadicalSum.coerce(other) - self

    def __neg__(self) -> "RadicalSum":
        return RadicalSum({d: -c for d, c in self._terms.items()})

    def __mul__(self, other: "RadicalSumLike") -> "RadicalSum":
        o = RadicalSum.coerce(other)
        out: dict[int, Fraction] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in o._terms.items():
                s, d = square_free_decompose(d1 * d2)
                out[d] = out.get(d, Fraction(0)) + c1 * c2 * s
        return RadicalSum(out)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> "RadicalSum":
        q = _as_fraction(other)
        if q == 0:
            raise ZeroDivisionError("division of a RadicalSum by zero")
        return RadicalSum({d: c / q for d, c in self._terms.items()})

    # -- ordering ---------------------------------------------------------

    def _bounds(self, prec: int) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        for d, c in self._terms.items():
            if d == 1:
                lo += c
                hi += c
                continue
            blo, bhi = _sqrt_bounds(d, prec)
            if c > 0:
                lo += c * blo
                hi += c * bhi
            else:
                lo += c * bhi
                hi += c * blo
        return lo, hi

    def _sign(self) -> int:
        if not self._terms:
            return 0
        if self.is_rational:
            return 1 if self._terms[1] > 0 else -1
        prec = 20
        while True:
            lo, hi = self._bounds(prec)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (RadicalSum, Scalar, int, Fraction)):
            return RadicalSum.coerce(other)._terms == self._terms
        return NotImplemented

    def __lt__(self, other: "RadicalSumLike") -> bool:
        if not isinstance(other, (RadicalSum, Scalar, int, Fraction)):
            return NotImplemented
        return (self - other)._sign() < 0

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self._terms.get(1, Fraction(0)))
        return hash(tuple(sorted(self._terms.items())))

    # -- conversions ------------------------------------------------------

    def __float__(self) -> float:
        return float(sum(float(c) * math.sqrt(d) for d, c in self._terms.items()))

    def __repr__(self) -> str:
        return f"RadicalSum({dict(sorted(self._terms.items()))!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for d in sorted(self._terms):
            c = self._terms[d]
            term = str(c) if d == 1 else (f"sqrt({d})" if c == 1 else f"{c}*sqrt({d})")
            if parts and not term.startswith("-"):
                parts.append("+")
            elif term.startswith("-"):
                if parts:
                    parts.append("-")
                    term = term[1:]
            parts.append(term)
        return " ".join(parts)


RadicalSumLike = Union[int, Fraction, Scalar, RadicalSum]
