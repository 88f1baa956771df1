"""``thetacert`` command line: evaluate kernels, list and verify catalog identities."""

from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

import click
import mpmath

from .identities import (FAMILIES, NotFound, VerificationReport, check_identity,
                         get_identity, load_catalog, working_bits)
from .invariants import G_numeric
from .kernel import DomainError, QPoint, a_cubic, chi, eta_modulus, phi, qpochhammer
from .numeric import InvalidArgument, format_decimal, to_rational, working

MAX_DIGITS = 1000
EVAL_FUNCTIONS = ("phi", "chi", "a", "G", "eta")

DigitsType = click.IntRange(1, MAX_DIGITS)


def _eval_value(function: str, n: Optional[str], q: Optional[str], bits: int):
    """The requested value as an mpf at ``bits`` bits."""
    if function in ("G",) and q is not None:
        raise InvalidArgument("G takes --n only")
    if n is not None:
        n_val = to_rational(n)
        if n_val <= 0:
            raise DomainError(f"--n must be positive, got {n}")
        point = QPoint.exp_pi_sqrt(n_val)
    else:
        point = QPoint.raw(to_rational(q))
    if function == "phi":
        return phi(point, bits).mpf
    if function == "chi":
        return chi(point, bits).mpf
    if function == "a":
        return a_cubic(point, bits).mpf
    if function == "G":
        return G_numeric(n_val, bits).value
    # eta
    if n is not None:
        return eta_modulus(n_val, False, bits).value
    with working(bits):
        x = point.value()
        if x < 0:
            raise DomainError("eta with --q needs 0 <= q < 1 (real q^(1/24))")
        if x == 0:
            return mpmath.mpf(0)
        return mpmath.root(x, 24) * qpochhammer(x, x, bits).mpf


@click.group()
def cli() -> None:
    """High-precision theta-function evaluations and identity certificates."""


@cli.command("eval")
@click.argument("function", type=click.Choice(EVAL_FUNCTIONS))
@click.option("--n", "n", help="Evaluate at q = exp(-pi*sqrt(n)), n a positive rational.")
@click.option("--q", "q", help="Evaluate at a raw real q with |q| < 1.")
@click.option("--digits", type=DigitsType, default=30, show_default=True,
              help="Decimal places to print (at most 1000).")
def cmd_eval(function: str, n: Optional[str], q: Optional[str], digits: int) -> None:
    """Print FUNCTION (phi, chi, a, G or eta) rounded half-even to DIGITS places.

    For eta, ``--n m`` gives |eta(i sqrt m)| and ``--q`` gives q^(1/24) (q; q)_inf.
    """
    if (n is None) == (q is None):
        raise click.UsageError("give exactly one of --n and --q")
    bits = working_bits(digits) + 64
    try:
        value = _eval_value(function, n, q, bits)
    except (InvalidArgument, ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(str(exc))
    click.echo(format_decimal(value, digits))


def _verify_one(args) -> VerificationReport:
    record, digits = args
    return check_identity(record, digits)


def _format_row(rep: VerificationReport) -> str:
    return (f"{rep.id:<28} {rep.status:<6} {rep.digits_certified:>5}/{rep.digits_requested:<5}"
            f" {rep.elapsed_ms:>7} ms")


@cli.command("verify")
@click.option("--id", "ids", multiple=True, help="Identity id (repeatable).")
@click.option("--all", "run_all", is_flag=True, help="Verify the whole catalog.")
@click.option("--digits", type=DigitsType, default=None,
              help="Digits to certify (default: per identity).")
@click.option("--json", "json_path", type=click.Path(dir_okay=False, writable=True),
              help="Also write the reports as a JSON array to this file.")
@click.option("--jobs", type=click.IntRange(1, 256), default=None,
              help="Worker processes for --all (default: CPU count).")
def cmd_verify(ids: tuple, run_all: bool, digits: Optional[int], json_path: Optional[str],
               jobs: Optional[int]) -> None:
    """Certify catalog identities; exit 0 iff every one passes."""
    if run_all == bool(ids):
        raise click.UsageError("give either --all or at least one --id")
    try:
        records = load_catalog() if run_all else [get_identity(i) for i in ids]
    except NotFound as exc:
        raise click.UsageError(str(exc))
    except (OSError, ValueError) as exc:
        raise click.UsageError(f"cannot load catalog: {exc}")
    tasks = [(rec, digits) for rec in records]
    if len(tasks) > 1 and jobs != 1:
        # mpmath keeps its precision in a process-global context, so fan out to
        # processes; map() returns results in submission (catalog) order
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports: List[VerificationReport] = list(pool.map(_verify_one, tasks))
    else:
        reports = [_verify_one(t) for t in tasks]
    click.echo(f"{'id':<28} {'status':<6} {'cert/req':>11} {'time':>10}")
    for rep in reports:
        click.echo(_format_row(rep))
        if rep.cause and rep.status != "pass":
            click.echo(f"    {rep.cause}")
    passed = sum(r.status == "pass" for r in reports)
    click.echo(f"{passed}/{len(reports)} passed")
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2)
            fh.write("\n")
    sys.exit(0 if passed == len(reports) else 1)


@cli.command("list")
@click.option("--filter", "family", type=click.Choice(FAMILIES),
              help="Only show one family.")
def cmd_list(family: Optional[str]) -> None:
    """List catalog entries: id, reference and default digits."""
    try:
        records = load_catalog()
    except (OSError, ValueError) as exc:
        raise click.UsageError(f"cannot load catalog: {exc}")
    for rec in records:
        if family is None or rec.family == family:
            click.echo(f"{rec.id}\t{rec.paper_ref}\t{rec.default_digits}")


def main(argv: Optional[List[str]] = None) -> None:
    cli.main(args=argv, prog_name="thetacert")


if __name__ == "__main__":
    main()
