"""Class invariants G_n: numerically from chi, and from the shipped table of
closed forms.

The table file lives next to the package (``data/invariants.tsv``), one line
per n::

    <n> <tab> <closed form> <tab> <provenance> <tab> <note>

Only one of n and 1/n is stored; :func:`G_table` answers for the other one
through G_n = G_{1/n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Dict, Optional

import mpmath
from mpmath import mp, mpf

from .closed import ClosedForm, eval_closed, parse_closed
from .kernel import DomainError, QPoint, chi, phi
from .numeric import GUARD_BITS, PrecReal, check_precision, to_rational, ulp_scale, working

PROVENANCES = ("ramanujan-weber-table", "derived-in-paper", "forced-by-relation")


class NotFound(KeyError):
    pass


@dataclass(frozen=True)
class InvariantEntry:
    n: Fraction
    closed_form: ClosedForm
    provenance: str
    note: str = ""


def _read_table(text: str) -> Dict[Fraction, InvariantEntry]:
    table: Dict[Fraction, InvariantEntry] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 3:
            raise ValueError(f"invariants table line {lineno}: expected >= 3 tab-separated fields")
        n = to_rational(parts[0])
        prov = parts[2].strip()
        if prov not in PROVENANCES:
            raise ValueError(f"invariants table line {lineno}: bad provenance {prov!r}")
        if n in table or (1 / n) in table:
            raise ValueError(f"invariants table line {lineno}: duplicate entry for {n}")
        table[n] = InvariantEntry(n, parse_closed(parts[1]), prov,
                                  parts[3].strip() if len(parts) > 3 else "")
    return table


@lru_cache(maxsize=1)
def load_table() -> Dict[Fraction, InvariantEntry]:
    text = resources.files("thetacert").joinpath("data/invariants.tsv").read_text("utf-8")
    return _read_table(text)


def table_keys() -> list:
    return sorted(load_table())


def G_table(n) -> InvariantEntry:
    """Table entry for n, materialising 1/n entries by reciprocal duality."""
    n = to_rational(n)
    table = load_table()
    if n in table:
        return table[n]
    if n > 0 and 1 / n in table:
        e = table[1 / n]
        return InvariantEntry(n, e.closed_form, "forced-by-relation",
                              f"G_{n} = G_{1 / n}")
    raise NotFound(f"no class invariant G_{n} in the table")


def has_table(n) -> bool:
    try:
        G_table(n)
    except NotFound:
        return False
    return True


def G_numeric(n, precision_bits: int, use_duality: bool = True) -> PrecReal:
    """G_n = 2^{-1/4} q^{-1/24} chi(q) with q = exp(-pi sqrt(n)).

    For n < 1 the computation is moved to 1/n (smaller q) unless
    ``use_duality`` is False.
    """
    check_precision(precision_bits)
    n = to_rational(n)
    if n <= 0:
        raise DomainError(f"G_n needs n > 0, got {n}")
    if use_duality and n < 1:
        n = 1 / n
    c = chi(QPoint.exp_pi_sqrt(n), precision_bits)
    with working(precision_bits):
        s = mpmath.sqrt(mpf(n.numerator) / n.denominator)
        v = mpmath.exp(mp.pi * s / 24) * c.mpf / mpmath.root(2, 4)
        err = abs(v) * (c.value.err_bound / abs(c.mpf) + ulp_scale(precision_bits + GUARD_BITS - 4))
    return PrecReal(v, precision_bits, err)


def G_value(n, precision_bits: int, source: str = "table") -> PrecReal:
    """G_n from the table (``source='table'``), numerically, or table-then-numeric."""
    if source == "numeric":
        return G_numeric(n, precision_bits)
    if source == "auto" and not has_table(n):
        return G_numeric(n, precision_bits)
    return eval_closed(G_table(n).closed_form, precision_bits)


def modular9_residual(n, precision_bits: int, source: str = "table") -> PrecReal:
    """|(1 + 2 sqrt2 G_9n^3/G_n^9)(1 + 2 sqrt2 G_n^3/G_9n^9) - 9|."""
    n = to_rational(n)
    g1 = G_value(n, precision_bits, source)
    g9 = G_value(9 * n, precision_bits, source)
    with working(precision_bits):
        a, b = g1.value, g9.value
        r2 = 2 * mpmath.sqrt(2)
        lhs = (1 + r2 * b ** 3 / a ** 9) * (1 + r2 * a ** 3 / b ** 9)
        res = abs(lhs - 9)
    return PrecReal(res, precision_bits, ulp_scale(precision_bits + GUARD_BITS // 2) * 16)


def G25n_from_theta(n, precision_bits: int, source: str = "auto") -> PrecReal:
    """G_25n = (G_n^5 / 2)(5 phi^2(e^{-5 pi sqrt n}) / phi^2(e^{-pi sqrt n}) - 1)."""
    n = to_rational(n)
    if n <= 0:
        raise DomainError(f"n must be positive, got {n}")
    g = G_value(n, precision_bits, source)
    top = phi(QPoint.exp_pi_sqrt(25 * n), precision_bits)
    bot = phi(QPoint.exp_pi_sqrt(n), precision_bits)
    with working(precision_bits):
        v = g.value ** 5 / 2 * (5 * (top.mpf / bot.mpf) ** 2 - 1)
    return PrecReal.from_mpf(v, precision_bits, precision_bits + GUARD_BITS // 2)
