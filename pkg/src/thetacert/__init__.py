"""Certified high-precision evaluation of Ramanujan-type theta-function quotients.

The package evaluates phi, chi, the cubic a(q) and Dedekind eta with explicit
truncation bounds, evaluates closed-form expressions (radicals, Gamma values,
real algebraic roots) to any precision, and certifies a catalog of identities
between the two to a requested number of digits.
"""

from .closed import EvaluationError, ParseError, eval_closed, parse_closed, print_closed
from .identities import (VerificationReport, check_identity, get_identity, load_catalog,
                         p_value, s_of_p)
from .invariants import G_numeric, G_table, G_value, G25n_from_theta, modular9_residual
from .kernel import DomainError, QPoint, a_cubic, chi, eta_modulus, f_general, phi, qpochhammer
from .numeric import InvalidArgument, PrecReal, format_decimal, gamma_rational, kronecker

__version__ = "0.1.0"

__all__ = [
    "DomainError", "EvaluationError", "G25n_from_theta", "G_numeric", "G_table", "G_value",
    "InvalidArgument", "ParseError", "PrecReal", "QPoint", "VerificationReport", "a_cubic",
    "check_identity", "chi", "eta_modulus", "eval_closed", "f_general", "format_decimal",
    "gamma_rational", "get_identity", "kronecker", "load_catalog", "modular9_residual",
    "p_value", "parse_closed", "phi", "print_closed", "qpochhammer", "s_of_p",
]
