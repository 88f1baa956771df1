"""Exact-constant expression trees, their prefix text format and evaluation.

The text format is a parenthesised prefix notation::

    (div 1 (nthroot 4 (sub (mul 6 (sqrt 3)) 9)))

Atoms are integers (``IntLit``) or ``p/q`` rationals (``RatLit``).  ``add``
and ``mul`` accept two or more operands and fold to the left; everything else
has fixed arity.  :func:`print_closed` always emits the binary form, which is
the normalised text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

import mpmath
from mpmath import mp, mpf

from .numeric import (
    GUARD_BITS,
    InvalidArgument,
    PrecReal,
    TRIG_KINDS,
    check_precision,
    kronecker,
    to_rational,
    ulp_scale,
    working,
)


class EvaluationError(ArithmeticError):
    """A closed form could not be evaluated (negative radicand, bad RootOf...)."""


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


# -- nodes -------------------------------------------------------------------

class ClosedForm:
    """Base class of all expression nodes.  Nodes are immutable."""

    __slots__ = ()

    def __str__(self):
        return print_closed(self)

    # a little sugar for building trees in Python
    def __add__(self, o): return Add(self, lift(o))
    def __radd__(self, o): return Add(lift(o), self)
    def __sub__(self, o): return Sub(self, lift(o))
    def __rsub__(self, o): return Sub(lift(o), self)
    def __mul__(self, o): return Mul(self, lift(o))
    def __rmul__(self, o): return Mul(lift(o), self)
    def __truediv__(self, o): return Div(self, lift(o))
    def __rtruediv__(self, o): return Div(lift(o), self)
    def __neg__(self): return Neg(self)

    def __pow__(self, r):
        return Pow(self, to_rational(r))


@dataclass(frozen=True)
class IntLit(ClosedForm):
    value: int


@dataclass(frozen=True)
class RatLit(ClosedForm):
    value: Fraction


@dataclass(frozen=True)
class Pi(ClosedForm):
    pass


@dataclass(frozen=True)
class Sqrt(ClosedForm):
    arg: ClosedForm


@dataclass(frozen=True)
class NthRoot(ClosedForm):
    k: int
    arg: ClosedForm


@dataclass(frozen=True)
class Pow(ClosedForm):
    base: ClosedForm
    exponent: Fraction


@dataclass(frozen=True)
class Add(ClosedForm):
    left: ClosedForm
    right: ClosedForm


@dataclass(frozen=True)
class Sub(ClosedForm):
    left: ClosedForm
    right: ClosedForm


@dataclass(frozen=True)
class Mul(ClosedForm):
    left: ClosedForm
    right: ClosedForm


@dataclass(frozen=True)
class Div(ClosedForm):
    left: ClosedForm
    right: ClosedForm


@dataclass(frozen=True)
class Neg(ClosedForm):
    arg: ClosedForm


@dataclass(frozen=True)
class TrigPi(ClosedForm):
    kind: str
    r: Fraction


@dataclass(frozen=True)
class GammaRat(ClosedForm):
    r: Fraction


@dataclass(frozen=True)
class GammaKroneckerProduct(ClosedForm):
    """prod_{m=1}^{modulus} Gamma(m/modulus) ** kronecker(discriminant, m)."""

    modulus: int
    discriminant: int


@dataclass(frozen=True)
class RootOf(ClosedForm):
    """The unique real root of sum coeffs[i] x**i inside [lo, hi]."""

    coeffs: tuple
    lo: Fraction
    hi: Fraction


def lift(x) -> ClosedForm:
    if isinstance(x, ClosedForm):
        return x
    if isinstance(x, bool):
        raise TypeError("cannot lift a bool")
    if isinstance(x, int):
        return IntLit(x)
    if isinstance(x, Fraction):
        return IntLit(x.numerator) if x.denominator == 1 else RatLit(x)
    if isinstance(x, str):
        return parse_closed(x)
    raise TypeError(f"cannot lift {x!r} to a closed form")


# -- printing ----------------------------------------------------------------

_BINARY = {Add: "add", Sub: "sub", Mul: "mul", Div: "div"}


def _rat_text(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}" if r.denominator != 1 else str(r.numerator)


def print_closed(e: ClosedForm) -> str:
    out: list[str] = []
    _emit(e, out)
    return "".join(out)


def _emit(e: ClosedForm, out: list) -> None:
    t = type(e)
    if t is IntLit:
        out.append(str(e.value))
    elif t is RatLit:
        out.append(f"{e.value.numerator}/{e.value.denominator}")
    elif t is Pi:
        out.append("(pi)")
    elif t is Sqrt:
        out.append("(sqrt ")
        _emit(e.arg, out)
        out.append(")")
    elif t is NthRoot:
        out.append(f"(nthroot {e.k} ")
        _emit(e.arg, out)
        out.append(")")
    elif t is Pow:
        out.append("(pow ")
        _emit(e.base, out)
        out.append(f" {_rat_text(e.exponent)})")
    elif t in _BINARY:
        out.append(f"({_BINARY[t]} ")
        _emit(e.left, out)
        out.append(" ")
        _emit(e.right, out)
        out.append(")")
    elif t is Neg:
        out.append("(neg ")
        _emit(e.arg, out)
        out.append(")")
    elif t is TrigPi:
        out.append(f"({e.kind} {_rat_text(e.r)})")
    elif t is GammaRat:
        out.append(f"(gamma {_rat_text(e.r)})")
    elif t is GammaKroneckerProduct:
        out.append(f"(gkp {e.modulus} {e.discriminant})")
    elif t is RootOf:
        out.append("(rootof (coeffs")
        for c in e.coeffs:
            out.append(" ")
            _emit(c, out)
        out.append(f") {_rat_text(e.lo)} {_rat_text(e.hi)})")
    else:
        raise TypeError(f"not a closed form node: {e!r}")


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")
_INT = re.compile(r"[+-]?\d+\Z")
_RAT = re.compile(r"[+-]?\d+/\d+\Z")


class _Tokens:
    def __init__(self, text: str):
        self.toks: list[tuple[str, int]] = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                break
            start = m.start(m.lastindex)
            self.toks.append((m.group(m.lastindex), start))
            pos = m.end()
        if text[pos:].strip():
            raise ParseError("unexpected character", pos)
        self.end = len(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, self.end)

    def next(self):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of input", self.end)
        self.i += 1
        return tok


def _atom_rational(tok: str, off: int) -> Fraction:
    if _INT.match(tok) or _RAT.match(tok):
        try:
            return Fraction(tok)
        except ZeroDivisionError:
            raise ParseError("zero denominator", off) from None
    raise ParseError(f"expected a rational, got {tok!r}", off)


def _atom_int(tok: str, off: int) -> int:
    if not _INT.match(tok):
        raise ParseError(f"expected an integer, got {tok!r}", off)
    return int(tok)


_ARITY = {"pi": 0, "sqrt": 1, "nthroot": 2, "pow": 2, "sub": 2, "div": 2, "neg": 1,
          "sin": 1, "cos": 1, "tan": 1, "gamma": 1, "gkp": 2, "rootof": 3}


def parse_closed(text: str) -> ClosedForm:
    """Parse the prefix text format into a tree."""
    toks = _Tokens(text)
    node = _parse(toks)
    tok, off = toks.peek()
    if tok is not None:
        raise ParseError(f"trailing input {tok!r}", off)
    return node


def _parse(toks: _Tokens) -> ClosedForm:
    tok, off = toks.next()
    if tok == ")":
        raise ParseError("unexpected ')'", off)
    if tok != "(":
        if _INT.match(tok):
            return IntLit(int(tok))
        if _RAT.match(tok):
            return RatLit(_atom_rational(tok, off))
        raise ParseError(f"unknown atom {tok!r}", off)
    head, hoff = toks.next()
    if head in ("(", ")"):
        raise ParseError("expected an operator name", hoff)
    args = []
    raw = []
    while True:
        t, o = toks.peek()
        if t is None:
            raise ParseError("unexpected end of input", o)
        if t == ")":
            toks.next()
            break
        if head == "rootof" and not args and t == "(":
            args.append(_parse_coeffs(toks))
            continue
        if head in ("gkp", "sin", "cos", "tan", "gamma") or \
                (head == "nthroot" and not args) or \
                (head == "pow" and len(args) == 1) or (head == "rootof" and args):
            if t == "(":
                raise ParseError(f"{head} expects a literal here", o)
            toks.next()
            raw.append((t, o))
            args.append(None)
            continue
        args.append(_parse(toks))
    n = len(args)
    if head in ("add", "mul"):
        if n < 2:
            raise ParseError(f"arity mismatch: {head} needs >= 2 operands, got {n}", hoff)
        cls = Add if head == "add" else Mul
        acc = args[0]
        for a in args[1:]:
            acc = cls(acc, a)
        return acc
    if head not in _ARITY:
        raise ParseError(f"unknown operator {head!r}", hoff)
    if n != _ARITY[head]:
        raise ParseError(f"arity mismatch: {head} needs {_ARITY[head]} operands, got {n}", hoff)
    if head == "pi":
        return Pi()
    if head == "sqrt":
        return Sqrt(args[0])
    if head == "neg":
        return Neg(args[0])
    if head == "sub":
        return Sub(*args)
    if head == "div":
        return Div(*args)
    if head == "nthroot":
        k = _atom_int(*raw[0])
        if k < 1:
            raise ParseError("nthroot index must be positive", raw[0][1])
        return NthRoot(k, args[1])
    if head == "pow":
        return Pow(args[0], _atom_rational(*raw[0]))
    if head in TRIG_KINDS:
        return TrigPi(head, _atom_rational(*raw[0]))
    if head == "gamma":
        return GammaRat(_atom_rational(*raw[0]))
    if head == "gkp":
        mod = _atom_int(*raw[0])
        if mod < 1:
            raise ParseError("gkp modulus must be positive", raw[0][1])
        return GammaKroneckerProduct(mod, _atom_int(*raw[1]))
    if head == "rootof":
        if not isinstance(args[0], tuple):
            raise ParseError("rootof expects (coeffs ...) first", hoff)
        return RootOf(args[0], _atom_rational(*raw[0]), _atom_rational(*raw[1]))
    raise ParseError(f"unknown operator {head!r}", hoff)  # pragma: no cover


def _parse_coeffs(toks: _Tokens) -> tuple:
    toks.next()  # "("
    head, off = toks.next()
    if head != "coeffs":
        raise ParseError("expected 'coeffs'", off)
    out = []
    while True:
        t, o = toks.peek()
        if t is None:
            raise ParseError("unexpected end of input", o)
        if t == ")":
            toks.next()
            break
        out.append(_parse(toks))
    if len(out) < 2:
        raise ParseError("rootof needs a polynomial of degree >= 1", off)
    return tuple(out)


# -- evaluation --------------------------------------------------------------

def eval_closed(e: ClosedForm, precision_bits: int) -> PrecReal:
    """Evaluate ``e``; the error bound assumes every primitive is correctly
    rounded at the guarded precision."""
    check_precision(precision_bits)
    if isinstance(e, str):
        e = parse_closed(e)
    with working(precision_bits):
        v = _eval(e, precision_bits)
    err = abs(v) * ulp_scale(precision_bits + GUARD_BITS // 2) + ulp_scale(
        precision_bits + GUARD_BITS // 2)
    return PrecReal(v, precision_bits, err)


def _radicand_check(x, what):
    if x < 0:
        raise EvaluationError(f"negative radicand {mpmath.nstr(x, 10)} under {what}")


def _eval(e: ClosedForm, prec: int):
    t = type(e)
    if t is IntLit:
        return mpf(e.value)
    if t is RatLit:
        return mpf(e.value.numerator) / e.value.denominator
    if t is Pi:
        return +mp.pi
    if t is Sqrt:
        x = _eval(e.arg, prec)
        _radicand_check(x, "sqrt")
        return mpmath.sqrt(x)
    if t is NthRoot:
        x = _eval(e.arg, prec)
        _radicand_check(x, f"nthroot {e.k}")
        return mpmath.root(x, e.k) if x else mpf(0)
    if t is Pow:
        x = _eval(e.base, prec)
        r = e.exponent
        if r.denominator == 1:
            if x == 0 and r < 0:
                raise EvaluationError("zero to a negative power")
            return x ** int(r)
        _radicand_check(x, f"pow {r}")
        if x == 0:
            if r < 0:
                raise EvaluationError("zero to a negative power")
            return mpf(0)
        return mpmath.exp(mpmath.log(x) * r.numerator / r.denominator) if r.denominator > 2 \
            else mpmath.sqrt(x) ** r.numerator
    if t is Add:
        return _eval(e.left, prec) + _eval(e.right, prec)
    if t is Sub:
        return _eval(e.left, prec) - _eval(e.right, prec)
    if t is Mul:
        return _eval(e.left, prec) * _eval(e.right, prec)
    if t is Div:
        d = _eval(e.right, prec)
        if d == 0:
            raise EvaluationError("division by zero")
        return _eval(e.left, prec) / d
    if t is Neg:
        return -_eval(e.arg, prec)
    if t is TrigPi:
        if e.kind == "tan" and e.r.denominator == 2:
            raise EvaluationError(f"tan pole at {e.r}*pi")
        x = mpf(e.r.numerator) / e.r.denominator
        return {"sin": mpmath.sinpi, "cos": mpmath.cospi}[e.kind](x) if e.kind != "tan" \
            else mpmath.sinpi(x) / mpmath.cospi(x)
    if t is GammaRat:
        if e.r <= 0:
            raise EvaluationError(f"gamma at non-positive rational {e.r}")
        return +_gamma_cached(e.r, mp.prec)
    if t is GammaKroneckerProduct:
        return +_gkp_cached(e.modulus, e.discriminant, mp.prec)
    if t is RootOf:
        coeffs = [_eval(c, prec) for c in e.coeffs]
        return _refine(coeffs, e.lo, e.hi, mp.prec)[0]
    raise TypeError(f"not a closed form node: {e!r}")


@lru_cache(maxsize=1024)
def _gamma_cached(r: Fraction, wp: int):
    with mp.workprec(wp):
        return mpmath.gamma(mpf(r.numerator) / r.denominator)


@lru_cache(maxsize=64)
def _gkp_cached(modulus: int, disc: int, wp: int):
    with mp.workprec(wp + 16):
        s = mpf(0)
        for m in range(1, modulus + 1):
            k = kronecker(disc, m)
            if k:
                s += k * mpmath.loggamma(mpf(m) / modulus)
        return mpmath.exp(s)


def _horner(coeffs, x):
    acc = mpf(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _dhorner(coeffs, x):
    acc = mpf(0)
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * x + i * coeffs[i]
    return acc


def _count_roots_in(coeffs, lo, hi) -> int:
    deg = len(coeffs) - 1
    roots = mpmath.polyroots(list(reversed(coeffs)), maxsteps=200, extraprec=2 * mp.prec)
    tol = ulp_scale(mp.prec // 2)
    return sum(1 for z in roots
               if abs(mpmath.im(z)) <= tol * max(1, abs(z)) and lo <= mpmath.re(z) <= hi) \
        if deg > 0 else 0


def _refine(coeffs, lo: Fraction, hi: Fraction, wp: int):
    """Bisection then safeguarded Newton on [lo, hi]; returns (root, width)."""
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if len(coeffs) < 2:
        raise InvalidArgument("rootof needs a polynomial of degree >= 1")
    a = mpf(lo.numerator) / lo.denominator
    b = mpf(hi.numerator) / hi.denominator
    if not a < b:
        raise EvaluationError(f"empty isolating interval [{lo}, {hi}]")
    fa, fb = _horner(coeffs, a), _horner(coeffs, b)
    if fa == 0:
        return a, mpf(0)
    if fb == 0:
        return b, mpf(0)
    if (fa > 0) == (fb > 0):
        raise EvaluationError(f"no sign change of the polynomial on [{lo}, {hi}]")
    if len(coeffs) > 2 and _count_roots_in(coeffs, a, b) != 1:
        raise EvaluationError(f"interval [{lo}, {hi}] does not isolate a single real root")
    neg_at_a = fa < 0
    # bisection to a modest width, so Newton starts in its quadratic basin
    for _ in range(60):
        m = (a + b) / 2
        fm = _horner(coeffs, m)
        if fm == 0:
            return m, mpf(0)
        if (fm < 0) == neg_at_a:
            a = m
        else:
            b = m
    x = (a + b) / 2
    eps = ulp_scale(wp - 4)
    for _ in range(4 * wp):
        fx = _horner(coeffs, x)
        if fx == 0:
            return x, mpf(0)
        if (fx < 0) == neg_at_a:
            a = x
        else:
            b = x
        d = _dhorner(coeffs, x)
        nx = x - fx / d if d != 0 else (a + b) / 2
        if not a < nx < b:
            nx = (a + b) / 2
        if abs(nx - x) <= eps * max(1, abs(x)) or b - a <= eps * max(1, abs(x)):
            x = nx
            break
        x = nx
    # certify by a sign change around x
    delta = ulp_scale(wp - 8) * max(1, abs(x))
    lo_v, hi_v = _horner(coeffs, x - delta), _horner(coeffs, x + delta)
    if (lo_v > 0) == (hi_v > 0) and lo_v != 0 and hi_v != 0:
        # fall back to the bracket itself
        return (a + b) / 2, (b - a) / 2
    return x, delta


def rootof_refine(coeffs: Sequence[Union[ClosedForm, int, Fraction, PrecReal]],
                  interval, precision_bits: int) -> PrecReal:
    """Refine the root of ``sum coeffs[i] x**i`` isolated by ``interval``.

    The error bound is the half-width of the certified sign-change bracket
    plus rounding.
    """
    check_precision(precision_bits)
    lo, hi = (to_rational(interval[0]), to_rational(interval[1]))
    with working(precision_bits):
        vals = []
        for c in coeffs:
            if isinstance(c, PrecReal):
                vals.append(+c.value)
            elif isinstance(c, ClosedForm):
                vals.append(_eval(c, precision_bits))
            else:
                r = to_rational(c)
                vals.append(mpf(r.numerator) / r.denominator)
        if len(vals) < 2 or all(v == 0 for v in vals[1:]):
            raise InvalidArgument("rootof needs a polynomial of degree >= 1")
        x, width = _refine(vals, lo, hi, precision_bits + GUARD_BITS)
    return PrecReal(x, precision_bits, width + abs(x) * ulp_scale(precision_bits + GUARD_BITS - 2))
