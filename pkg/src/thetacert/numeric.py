"""Multiprecision scalars and the handful of special constants the rest of the
package is built from.

Everything here is backed by :mod:`mpmath`.  Values cross module boundaries as
:class:`PrecReal`, which pairs an ``mpf`` with the precision it was requested
at and a conservative absolute error bound.  Internally every computation runs
:data:`GUARD_BITS` above the requested precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

import mpmath
from mpmath import mp, mpf

MIN_PRECISION = 64
GUARD_BITS = 64

#: Rationals are plain :class:`fractions.Fraction` objects (always reduced,
#: positive denominator).
Rational = Fraction

RationalLike = Union[int, Fraction, str]


class InvalidArgument(ValueError):
    """Raised when an argument is outside an operation's domain."""


def to_rational(x: RationalLike) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InvalidArgument("booleans are not rationals")
    if isinstance(x, int) or isinstance(x, _RationalABC):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgument(f"not a rational: {x!r}") from exc
    raise InvalidArgument(f"not a rational: {x!r}")


def check_precision(precision_bits: int) -> int:
    if not isinstance(precision_bits, int) or precision_bits < MIN_PRECISION:
        raise InvalidArgument(
            f"precision_bits must be an integer >= {MIN_PRECISION}, got {precision_bits!r}"
        )
    return precision_bits


def working(precision_bits: int):
    """Context manager switching mpmath to ``precision_bits + GUARD_BITS``."""
    return mp.workprec(precision_bits + GUARD_BITS)


def ulp_scale(precision_bits: int) -> mpf:
    """2**-precision_bits as an mpf (exact)."""
    return mpmath.ldexp(mpf(1), -precision_bits)


@dataclass(frozen=True)
class PrecReal:
    """A real number at a stated precision with an absolute error bound.

    ``err_bound`` bounds ``|value - true value|``.  Arithmetic between
    PrecReals (and exact ints/Fractions) propagates the bound conservatively;
    the result precision is the smaller of the two operand precisions.
    """

    value: mpf
    precision_bits: int
    err_bound: mpf = mpf(0)

    def __post_init__(self):
        check_precision(self.precision_bits)
        err = mpf(self.err_bound)
        if not mpmath.isfinite(err) or err < 0:
            raise InvalidArgument(f"err_bound must be finite and >= 0, got {err}")
        object.__setattr__(self, "err_bound", err)
        if not isinstance(self.value, mpf):
            object.__setattr__(self, "value", mpf(self.value))

    # construction ---------------------------------------------------------

    @classmethod
    def exact(cls, x: RationalLike, precision_bits: int) -> "PrecReal":
        """Round an exact rational; the bound covers only that rounding."""
        r = to_rational(x)
        with working(precision_bits):
            v = mpf(r.numerator) / r.denominator
        err = mpf(0) if r.denominator == 1 else _rounding(v, precision_bits)
        return cls(v, precision_bits, err)

    @classmethod
    def from_mpf(cls, v, precision_bits: int, rel_bits: int | None = None) -> "PrecReal":
        """Wrap an mpf computed at guarded precision.

        ``rel_bits`` is the number of bits of relative accuracy claimed; it
        defaults to ``precision_bits + GUARD_BITS - 8``.
        """
        if rel_bits is None:
            rel_bits = precision_bits + GUARD_BITS - 8
        v = v if isinstance(v, mpf) else mpf(v)
        return cls(v, precision_bits, abs(v) * ulp_scale(rel_bits))

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "PrecReal":
        if isinstance(other, PrecReal):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PrecReal.exact(other, self.precision_bits)
        return NotImplemented

    # mpf negation and abs round to the ambient context, so do them at full width
    def __neg__(self):
        with working(self.precision_bits):
            return PrecReal(-self.value, self.precision_bits, self.err_bound)

    def __abs__(self):
        with working(self.precision_bits):
            return PrecReal(abs(self.value), self.precision_bits, self.err_bound)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = min(self.precision_bits, o.precision_bits)
        with working(p):
            v = self.value + o.value
            err = self.err_bound + o.err_bound + _rounding(v, p)
        return PrecReal(v, p, err)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = min(self.precision_bits, o.precision_bits)
        with working(p):
            v = self.value * o.value
            err = (abs(self.value) * o.err_bound + abs(o.value) * self.err_bound
                   + self.err_bound * o.err_bound + _rounding(v, p))
        return PrecReal(v, p, err)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = min(self.precision_bits, o.precision_bits)
        with working(p):
            b = abs(o.value)
            if b <= o.err_bound:
                raise ZeroDivisionError("divisor interval contains zero")
            v = self.value / o.value
            err = ((abs(self.value) * o.err_bound + b * self.err_bound)
                   / (b * (b - o.err_bound)) + _rounding(v, p))
        return PrecReal(v, p, err)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        if k < 0:
            return 1 / (self ** -k)
        result = PrecReal(mpf(1), self.precision_bits, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sqrt(self) -> "PrecReal":
        p = self.precision_bits
        with working(p):
            if self.value < self.err_bound:
                raise InvalidArgument("square root of a value not certified positive")
            v = mpmath.sqrt(self.value)
            err = self.err_bound / mpmath.sqrt(self.value - self.err_bound) if self.err_bound else mpf(0)
            err += _rounding(v, p)
        return PrecReal(v, p, err)

    # conversion -----------------------------------------------------------

    def __float__(self):
        return float(self.value)

    def to_decimal(self, digits: int) -> str:
        """Fixed-point decimal string with ``digits`` places, round-half-even."""
        return format_decimal(self.value, digits)

    def __repr__(self):
        with mp.workprec(self.precision_bits):
            s = mpmath.nstr(self.value, max(15, int(self.precision_bits * 0.30103)))
        return f"PrecReal({s}, bits={self.precision_bits}, err<={mpmath.nstr(self.err_bound, 3)})"


def _rounding(v, precision_bits: int) -> mpf:
    # one rounding at the guarded working precision, with a factor-2 margin
    return abs(v) * ulp_scale(precision_bits + GUARD_BITS - 1)


def _exact_mpf(value) -> mpf:
    """``value`` as an mpf without rounding it to the ambient precision."""
    if isinstance(value, PrecReal):
        return value.value
    if isinstance(value, mpf):
        return value
    if isinstance(value, (int, Fraction)):
        with mp.workprec(max(mp.prec, 4 * abs(Fraction(value).numerator).bit_length() + 64)):
            return mpf(Fraction(value).numerator) / Fraction(value).denominator
    return mpf(value)


def _exact_decimal(v: mpf):
    """The exact binary value of a finite mpf as a Decimal."""
    from decimal import Decimal, localcontext

    if v == 0:
        return Decimal(0)
    sign, man, exp, _ = v._mpf_
    man = -int(man) if sign else int(man)
    exp = int(exp)
    if exp >= 0:
        return Decimal(man << exp)
    # man / 2**k == man * 5**k / 10**k, exactly
    scaled = Decimal(man * 5 ** (-exp))
    with localcontext() as ctx:
        ctx.prec = len(scaled.as_tuple().digits) + 2
        return scaled.scaleb(exp)


def format_decimal(value, digits: int) -> str:
    """Round ``value`` to ``digits`` decimal places (half-even) exactly.

    The conversion goes through the mpf's exact binary expansion so no
    double rounding happens.
    """
    from decimal import Decimal, ROUND_HALF_EVEN, localcontext

    exact = _exact_decimal(_exact_mpf(value))
    quantum = Decimal(1).scaleb(-digits)
    with localcontext() as ctx:
        ctx.prec = max(50, digits + len(str(abs(int(exact)))) + 10)
        out = exact.quantize(quantum, rounding=ROUND_HALF_EVEN)
    return f"{out:f}"


# -- constants ---------------------------------------------------------------

def const_pi(precision_bits: int) -> PrecReal:
    check_precision(precision_bits)
    with working(precision_bits):
        v = +mp.pi
    return PrecReal(v, precision_bits, ulp_scale(precision_bits + GUARD_BITS - 4))


def kronecker(a: int, m: int) -> int:
    """Kronecker symbol (a/m) for m >= 1.

    >>> kronecker(-68, 1), kronecker(-68, 2), kronecker(-148, 3)
    (1, 0, -1)
    """
    if m < 1:
        raise InvalidArgument(f"kronecker symbol needs m >= 1, got {m}")
    if m == 1:
        return 1
    if a % 2 == 0 and m % 2 == 0:
        return 0
    v = (m & -m).bit_length() - 1
    m >>= v
    k = 1
    if v % 2 == 1:
        k = 1 if a % 8 in (1, 7) else -1
    # Jacobi symbol for odd m >= 1
    a %= m
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                k = -k
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            k = -k
        a %= m
    return k if m == 1 else 0


def gamma_rational(r: RationalLike, precision_bits: int) -> PrecReal:
    """Gamma at a positive rational, relative error below 2**(-precision_bits+8)."""
    r = to_rational(r)
    check_precision(precision_bits)
    if r <= 0:
        raise InvalidArgument(f"gamma_rational needs r > 0 (pole or excluded), got {r}")
    with working(precision_bits):
        if r.denominator == 1:
            v = mpf(math.factorial(r.numerator - 1))
            return PrecReal(v, precision_bits, _rounding(v, precision_bits))
        v = mpmath.gamma(mpf(r.numerator) / r.denominator)
    return PrecReal.from_mpf(v, precision_bits)


TRIG_KINDS = ("sin", "cos", "tan")


def trig_pi(kind: str, r: RationalLike, precision_bits: int) -> PrecReal:
    """sin, cos or tan of ``r*pi`` for rational ``r``."""
    r = to_rational(r)
    check_precision(precision_bits)
    if kind not in TRIG_KINDS:
        raise InvalidArgument(f"unknown trig kind {kind!r}")
    if kind == "tan" and r.denominator == 2:
        raise InvalidArgument(f"tan has a pole at {r}*pi")
    with working(precision_bits):
        x = mpf(r.numerator) / r.denominator
        if kind == "sin":
            v = mpmath.sinpi(x)
        elif kind == "cos":
            v = mpmath.cospi(x)
        else:
            v = mpmath.sinpi(x) / mpmath.cospi(x)
    err = ulp_scale(precision_bits + GUARD_BITS - 8) * max(mpf(1), abs(v))
    return PrecReal(v, precision_bits, err)


def format_significant(value, sig: int) -> str:
    """``value`` to ``sig`` significant digits (half-even), in plain or
    exponent notation as :class:`decimal.Decimal` prints it."""
    from decimal import Decimal, ROUND_HALF_EVEN, localcontext

    v = _exact_mpf(value)
    if not mpmath.isfinite(v):
        return "NaN"
    if v == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = sig
        ctx.rounding = ROUND_HALF_EVEN
        return str(+_exact_decimal(v))
