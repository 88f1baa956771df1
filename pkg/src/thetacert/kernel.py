"""q-series and q-products: phi, f(a, b), chi, the cubic theta a(q), theta_3 and
moduli of the Dedekind eta function at the two imaginary-quadratic shapes we
need.

Truncation points are picked from a-priori tail bounds, so every result
carries the bound it was truncated against (``SeriesValue.tail_bound``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath
from mpmath import mp, mpf

from .numeric import (
    GUARD_BITS,
    InvalidArgument,
    PrecReal,
    check_precision,
    to_rational,
    ulp_scale,
    working,
)


class DomainError(InvalidArgument):
    """|q| >= 1 or a non-positive modulus."""


@dataclass(frozen=True)
class QPoint:
    """Where to evaluate: a raw ``q`` or ``q = exp(-pi*sqrt(n))``.

    Raw ``q`` is kept exact when given as an int/Fraction/string so it can be
    re-materialised at any precision; mpf input is used as is.
    """

    mode: str
    q: Optional[Union[Fraction, mpf]] = None
    n: Optional[Fraction] = None

    def __post_init__(self):
        if self.mode == "raw":
            if self.q is None:
                raise InvalidArgument("raw QPoint needs q")
            if abs(self.q) >= 1:
                raise DomainError(f"|q| must be < 1, got {self.q}")
        elif self.mode == "exp-pi-sqrt":
            if self.n is None or self.n <= 0:
                raise DomainError(f"exp-pi-sqrt QPoint needs n > 0, got {self.n}")
        else:
            raise InvalidArgument(f"unknown QPoint mode {self.mode!r}")

    @classmethod
    def raw(cls, q) -> "QPoint":
        if isinstance(q, PrecReal):
            q = q.value
        if isinstance(q, float):
            q = Fraction(q)
        elif isinstance(q, (int, str)):
            q = to_rational(q)
        elif not isinstance(q, (Fraction, mpf)):
            q = mpf(q)
        return cls("raw", q=q)

    @classmethod
    def exp_pi_sqrt(cls, n) -> "QPoint":
        return cls("exp-pi-sqrt", n=to_rational(n))

    def value(self) -> mpf:
        """q at the ambient mpmath precision."""
        if self.mode == "raw":
            if isinstance(self.q, Fraction):
                return mpf(self.q.numerator) / self.q.denominator
            return +self.q
        return mpmath.exp(-mp.pi * mpmath.sqrt(mpf(self.n.numerator) / self.n.denominator))

    def power(self, k: int) -> "QPoint":
        """The point q**k (exact in both modes for rational data)."""
        if k < 1:
            raise InvalidArgument("power must be a positive integer")
        if self.mode == "exp-pi-sqrt":
            return QPoint.exp_pi_sqrt(self.n * k * k)
        if isinstance(self.q, Fraction):
            return QPoint("raw", q=self.q ** k)
        return QPoint("raw", q=self.q ** k)


def as_qpoint(q) -> QPoint:
    return q if isinstance(q, QPoint) else QPoint.raw(q)


@dataclass(frozen=True)
class SeriesValue:
    value: PrecReal
    terms_used: int
    tail_bound: mpf

    @property
    def mpf(self) -> mpf:
        return self.value.value

    def __float__(self):
        return float(self.value.value)


def _target(precision_bits: int) -> mpf:
    return ulp_scale(precision_bits + GUARD_BITS // 2)


def _finish(v, precision_bits, terms, tail, rounding_ops) -> SeriesValue:
    rnd = abs(v) * ulp_scale(precision_bits + GUARD_BITS) * (rounding_ops + 1) + ulp_scale(
        precision_bits + GUARD_BITS)
    return SeriesValue(PrecReal(v, precision_bits, tail + rnd), terms, tail)


def _checked_q(q: QPoint) -> mpf:
    x = q.value()
    if abs(x) >= 1:
        raise DomainError(f"|q| must be < 1, got {x}")
    return x


def phi(q, precision_bits: int) -> SeriesValue:
    """Ramanujan's phi(q) = sum over all integers n of q**(n*n)."""
    check_precision(precision_bits)
    q = as_qpoint(q)
    with working(precision_bits):
        x = _checked_q(q)
        if x == 0:
            return SeriesValue(PrecReal(mpf(1), precision_bits, 0), 1, mpf(0))
        target = _target(precision_bits)
        ax = abs(x)
        x2 = x * x
        s = mpf(1)
        term = mpf(1)      # x**(n*n)
        step = x           # x**(2n+1)
        n = 0
        while True:
            term *= step
            step *= x2
            n += 1
            s += 2 * term
            # tail from n+1 on: 2|x|^((n+1)^2) / (1 - |x|^(2n+3))
            nxt = abs(term * step)
            tail = 2 * nxt / (1 - ax ** (2 * n + 3))
            if tail < target:
                break
        return _finish(s, precision_bits, n + 1, tail, 2 * n)


def theta3(q, precision_bits: int) -> SeriesValue:
    """theta_3(0, q); the same series as :func:`phi`."""
    return phi(q, precision_bits)


def _as_mpf(x) -> mpf:
    if isinstance(x, PrecReal):
        return x.value
    if isinstance(x, SeriesValue):
        return x.value.value
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, QPoint):
        return x.value()
    return mpf(x)


def f_general(a, b, precision_bits: int) -> SeriesValue:
    """Ramanujan's general theta function

        f(a, b) = sum_n a**(n(n+1)/2) * b**(n(n-1)/2),   |ab| < 1.

    Each half of the bilateral sum uses ``s[j+1] = s[j] * c * (ab)**j`` with
    ``c = a`` for n >= 0 and ``c = b`` for n < 0; the sum is cut once the
    geometric bound on what is left drops below the target.
    """
    check_precision(precision_bits)
    with working(precision_bits):
        a = _as_mpf(a)
        b = _as_mpf(b)
        ab = a * b
        if abs(ab) >= 1:
            raise DomainError(f"f(a, b) needs |ab| < 1, got {ab}")
        target = _target(precision_bits) / 2
        total = mpf(1)
        terms = 1
        tails = mpf(0)
        for c in (a, b):
            s = mpf(1)
            abj = mpf(1)  # (ab)**j
            j = 0
            while True:
                if c == 0:
                    tail = mpf(0)
                    break
                s = s * c * abj
                abj *= ab
                j += 1
                total += s
                terms += 1
                ratio = abs(c * abj)
                if ratio < 1:
                    tail = abs(s) * ratio / (1 - ratio)
                    if tail < target:
                        break
            tails += tail
        return _finish(total, precision_bits, terms, tails, 3 * terms)


def qpochhammer(a, q, precision_bits: int, skip_first: bool = False) -> SeriesValue:
    """(a; q)_infinity = prod_{k>=0} (1 - a q**k), truncated by a log-tail bound.

    With ``skip_first`` the k = 0 factor is omitted, i.e. (aq; q)_inf.
    """
    check_precision(precision_bits)
    with working(precision_bits):
        a = _as_mpf(a)
        x = _as_mpf(q)
        if abs(x) >= 1:
            raise DomainError(f"|q| must be < 1, got {x}")
        target = _target(precision_bits)
        ax, aa = abs(x), abs(a)
        if aa == 0 or x == 0:
            v = mpf(1) if (aa == 0 or skip_first) else 1 - a
            return _finish(v, precision_bits, 1, mpf(0), 1)
        prod = mpf(1)
        y = a if not skip_first else a * x   # a*q**k
        k = 0
        while True:
            prod *= (1 - y)
            y *= x
            k += 1
            ay = abs(y)
            if ay < mpf(1) / 2:
                # sum_{i>=0} |y| |x|^i / (1 - |y|) bounds |log| of the rest
                t = ay / ((1 - ax) * (1 - ay))
                if t < target:
                    tail = abs(prod) * 2 * t
                    break
        return _finish(prod, precision_bits, k, tail, k)


def chi(q, precision_bits: int) -> SeriesValue:
    """chi(q) = (-q; q^2)_infinity."""
    q = as_qpoint(q)
    with working(precision_bits):
        x = _checked_q(q)
        return qpochhammer(-x, x * x, precision_bits)


def a_cubic(q, precision_bits: int) -> SeriesValue:
    """The Borweins' cubic theta function, a(q) = sum_{m,n} q**(m^2 + mn + n^2).

    The lattice sum is cut to |m|, |n| <= M with M from
    m^2 + mn + n^2 >= (m^2 + n^2)/2, which bounds the discarded part by
    2 * S_out * S_all in terms of r = |q|**(1/2).
    """
    check_precision(precision_bits)
    q = as_qpoint(q)
    with working(precision_bits):
        x = _checked_q(q)
        if x == 0:
            return SeriesValue(PrecReal(mpf(1), precision_bits, 0), 1, mpf(0))
        target = _target(precision_bits)
        r = mpmath.sqrt(abs(x))
        s_all = 1 + 2 * r / (1 - r)
        M = 0
        while True:
            s_out = 2 * r ** ((M + 1) ** 2) / (1 - r ** (2 * M + 3))
            tail = 2 * s_out * s_all
            if tail < target:
                break
            M += 1
        counts: dict[int, int] = {}
        for m in range(-M, M + 1):
            for n in range(-M, M + 1):
                e = m * m + m * n + n * n
                counts[e] = counts.get(e, 0) + 1
        total = mpf(0)
        for e in sorted(counts):
            total += counts[e] * x ** e
        return _finish(total, precision_bits, (2 * M + 1) ** 2, tail, 2 * len(counts))


def eta_modulus(m, half_shift: bool, precision_bits: int) -> PrecReal:
    """|eta(tau)| for tau = sqrt(-m), or tau = (sqrt(-m) + 1)/2 if ``half_shift``.

    Only real arithmetic is needed: e^{2 pi i tau} is exp(-2 pi sqrt(m)) in the
    first case and -exp(-pi sqrt(m)) in the second, and |q^{1/24}| = |q|^{1/24}.
    """
    check_precision(precision_bits)
    m = to_rational(m)
    if m <= 0:
        raise DomainError(f"eta_modulus needs m > 0, got {m}")
    with working(precision_bits):
        s = mpmath.sqrt(mpf(m.numerator) / m.denominator)
        if half_shift:
            x = -mpmath.exp(-mp.pi * s)
            lead = mpmath.exp(-mp.pi * s / 24)
        else:
            x = mpmath.exp(-2 * mp.pi * s)
            lead = mpmath.exp(-2 * mp.pi * s / 24)
        prod = qpochhammer(x, x, precision_bits)
        v = lead * prod.mpf
        err = lead * prod.value.err_bound + abs(v) * ulp_scale(precision_bits + GUARD_BITS - 4)
        return PrecReal(abs(v), precision_bits, err)
