"""``veronese`` command line.

Exit codes: 0 success, 1 verification mismatch, 2 infeasible under guards,
3 invalid input.  Every global flag can also be set through an environment
variable named ``VERONESE_<FLAG>`` (for example ``VERONESE_Q=5``).
"""

from __future__ import annotations

import functools
import sys

import click

from . import __version__
from .errors import GuardExceeded, VeroneseError
from .matroid import DEFAULT_GUARD
from .oracle import SUBCODE_GUARD, WORD_GUARD
from .report import emit_report
from .runner import FORMATS, RunConfig, dispatch

OK, MISMATCH, INFEASIBLE, INVALID = 0, 1, 2, 3


def _parse_modulus(ctx, param, value):
    if value in (None, ""):
        return None
    try:
        return tuple(int(c) for c in value.replace(" ", "").split(","))
    except ValueError:
        raise click.BadParameter("expected comma-separated ascending coefficients, e.g. 1,0,1,1") from None


def _global_options(fn):
    opts = [
        click.option("--q", "q", type=int, default=4, show_default=True, envvar="VERONESE_Q",
                     help="Field size (a prime power)."),
        click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True,
                     envvar="VERONESE_THREADS", help="Worker threads for parallel kernels."),
        click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True,
                     envvar="VERONESE_FORMAT"),
        click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
                     envvar="VERONESE_OUT", help="Write the report here instead of stdout."),
        click.option("--exhaustive-guard", type=click.IntRange(min=0), default=DEFAULT_GUARD, show_default=True,
                     envvar="VERONESE_EXHAUSTIVE_GUARD", help="Largest ground set scanned exhaustively."),
        click.option("--word-guard", type=click.IntRange(min=0), default=WORD_GUARD, show_default=True,
                     envvar="VERONESE_WORD_GUARD", help="Largest number of codewords enumerated."),
        click.option("--subcode-guard", type=click.IntRange(min=0), default=SUBCODE_GUARD, show_default=True,
                     envvar="VERONESE_SUBCODE_GUARD", help="Largest number of subcodes enumerated."),
        click.option("--modulus", callback=_parse_modulus, default=None, envvar="VERONESE_MODULUS",
                     help="Ascending coefficients of the top extension modulus, e.g. 1,0,1,1."),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _run(command: str, options: dict, *, q, threads, fmt, out, exhaustive_guard, word_guard,
         subcode_guard, modulus) -> int:
    cfg = RunConfig(command=command, q=q, options=options, threads=threads, exhaustive_guard=exhaustive_guard,
                    word_guard=word_guard, subcode_guard=subcode_guard, fmt=fmt, out=out, modulus=modulus)
    try:
        report = dispatch(cfg)
    except GuardExceeded as exc:
        click.echo(f"infeasible: {exc}", err=True)
        return INFEASIBLE
    except VeroneseError as exc:
        click.echo(f"error: {exc}", err=True)
        return exc.exit_code
    data = emit_report(report, fmt)
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    if report.checks and not report.verified:
        failed = [c.name for c in report.checks if not c.passed]
        click.echo(f"verification failed: {', '.join(failed)}", err=True)
        return MISMATCH
    return OK


def _command(group, name, command=None):
    """Register ``fn(**local) -> options`` as a subcommand carrying the global flags."""

    def wrap(fn):
        @group.command(name)
        @_global_options
        @functools.wraps(fn)
        def cmd(q, threads, fmt, out, exhaustive_guard, word_guard, subcode_guard, modulus, **local):
            return _run(command or name, fn(**local), q=q, threads=threads, fmt=fmt, out=out,
                        exhaustive_guard=exhaustive_guard, word_guard=word_guard,
                        subcode_guard=subcode_guard, modulus=modulus)
        return cmd

    return wrap


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="veronese")
def cli():
    """Betti tables, weight polynomials and higher weight spectra of Veronese codes."""


@_command(cli, "census")
def census():
    """Count the conics of P^2(F_q) by class."""
    return {}


@_command(cli, "betti")
@click.option("--method", type=click.Choice(["auto", "exhaustive", "structural"]), default="auto",
              show_default=True)
@click.option("--level", type=int, default=None, help="Only this elongation level.")
def betti(method, level):
    """Betti tables of the matroid and its elongations."""
    return {"method": method, "level": level}


@_command(cli, "gwp")
def gwp():
    """Generalized weight polynomials, ascending coefficients."""
    return {}


@_command(cli, "spectra")
@click.option("--check", default="", help="Comma-separated subset of: formulas, oracle.")
def spectra(check):
    """Higher weight spectra (r, w, count)."""
    return {"check": tuple(c for c in check.replace(" ", "").split(",") if c)}


@_command(cli, "verify")
def verify():
    """Run every cross-check that fits under the guards."""
    return {}


@_command(cli, "reference")
@click.option("--table", type=click.Choice(["all", "census", "ladder", "spectra", "betti", "gwp", "minimal"]),
              default="all", show_default=True)
def reference(table):
    """Dump the closed-form fixtures."""
    return {"table": table}


@_command(cli, "matroid")
@click.option("--cycles", "nullity", type=click.IntRange(min=1), default=1, show_default=True,
              help="Nullity of the minimal sets to count.")
@click.option("--method", type=click.Choice(["auto", "exhaustive", "structural"]), default="auto",
              show_default=True)
def matroid(nullity, method):
    """Size census of inclusion-minimal sets of a given nullity."""
    return {"cycles": nullity, "method": method}


@_command(cli, "generator")
def generator():
    """Export the generator matrix and the point order."""
    return {}


@cli.group()
def oracle():
    """Brute-force enumeration."""


@_command(oracle, "words", command="oracle")
@click.option("--ext", type=click.IntRange(min=1), default=1, show_default=True,
              help="Extension degree m; words are taken over F_{q^m}.")
def oracle_words(ext):
    """Weight distribution of every codeword over F_{q^m}."""
    return {"kind": "words", "ext": ext}


@_command(oracle, "subcodes", command="oracle")
@click.option("--r", "r", type=click.IntRange(min=0, max=6), default=1, show_default=True)
def oracle_subcodes(r):
    """Support-weight distribution of every r-dimensional subcode."""
    return {"kind": "subcodes", "r": r}


def main(argv=None) -> int:
    try:
        rc = cli.main(args=argv, prog_name="veronese", standalone_mode=False)
    except click.exceptions.UsageError as exc:
        exc.show()
        return INVALID
    except click.exceptions.ClickException as exc:
        exc.show()
        return INVALID
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return MISMATCH
    return rc if isinstance(rc, int) else OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
