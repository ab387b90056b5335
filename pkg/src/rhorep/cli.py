#!/usr/bin/env python
"""
rhorep: braid group representations from the Steinberg module of restricted quantum sl(2).

Every command prints one JSON document (or a table with --format table) and exits with
0 on success, 1 when a computed object disagrees with its closed form, 2 on bad parameters.
"""

import logging
from typing import Any, Callable, Optional

import click
import numpy as np
from pydantic import ValidationError
from tabulate import tabulate

from . import __version__
from .config import Command, HeckeCheck, OutputFormat, RepKind, RunConfig, default_log_level, default_threads
from .errors import ParameterError, RhorepError
from .export import encode, write_document
from .reps import generic, hecke
from .reps.braid import BraidAction, BraidWord, v_action
from .reps.dominant import full_twist_check, n_action, split_check_SR, sr_action
from .reps.lawrence import w_action
from .reps.oracle import sigma_float
from .reps.reports import SplitReport
from .reps.weightspace import space_dims
from .verify import FLOAT_TOLERANCE, run_verify_all

logger = logging.getLogger(__name__)


class RunFailed(Exception):
    """A command finished but its document reports a failed check."""

    def __init__(self, doc: dict):
        super().__init__("check failed")
        self.doc = doc


# handlers

def _action(config: RunConfig) -> BraidAction:
    n, l, r = config.n, config.l, config.r
    builders: dict[RepKind, Callable[[], BraidAction]] = {
        RepKind.V: lambda: v_action(n, l, r),
        RepKind.W: lambda: w_action(n, l, r),
        RepKind.N: lambda: n_action(n, l, r),
        RepKind.N20: lambda: generic.specialized_action("N20", n, r),
        RepKind.N21: lambda: generic.specialized_action("N21", n, r),
        RepKind.SR: lambda: sr_action(n, l, r),
    }
    return builders[config.rep]()


def _float_word(config: RunConfig, word: BraidWord) -> np.ndarray:
    n, l, r = config.n, config.l, config.r
    dim = v_action(n, l, r).dim
    result = np.eye(dim, dtype=complex)
    for g in word.letters:
        m = sigma_float(n, l, r, abs(g))
        result = result @ (m if g > 0 else np.linalg.inv(m))
    return result


def run_matrices(config: RunConfig) -> dict:
    action = _action(config)
    if config.word is not None:
        words = {config.word: BraidWord.parse(config.word, config.n)}
    else:
        words = {str(i): BraidWord(config.n, (i,)) for i in range(1, config.n)}
    doc: dict[str, Any] = {"rep": config.rep.value, "n": config.n, "l": config.l, "r": config.r, "dim": action.dim}
    doc["matrices"] = {name: action.evaluate(word) for name, word in words.items()}
    if config.float_check:
        if config.rep is not RepKind.V:
            raise ParameterError("--float-check compares against the tensor space and needs --rep V")
        deviations = {
            name: float(np.max(np.abs(doc["matrices"][name].to_complex() - _float_word(config, word)), initial=0.0))
            for name, word in words.items()
        }
        doc["float_check"] = {"max_deviation": deviations, "tolerance": FLOAT_TOLERANCE}
        if any(d > FLOAT_TOLERANCE for d in deviations.values()):
            raise RunFailed(doc)
    return doc


def run_dims(config: RunConfig) -> dict:
    return space_dims(config.n, config.l, config.r)


def run_twist(config: RunConfig) -> dict:
    report = full_twist_check(config.n, config.l, config.r)
    if not report["matches_formula"]:
        raise RunFailed(dict(report))
    return dict(report)


def run_split_check(config: RunConfig) -> dict:
    if config.rep in (RepKind.N20, RepKind.N21):
        return generic.specialize_and_compare(config.n, config.r, config.rep.value)
    if config.rep is RepKind.SR:
        section = split_check_SR(config.n, config.l, config.r)
        return dict(SplitReport(rep="SR", n=config.n, r=config.r, split=section.split, certificate=section.certificate()))
    raise ParameterError("split-check takes --rep N20, N21 or SR")


def run_generic(config: RunConfig) -> dict:
    if config.rep not in (RepKind.N20, RepKind.N21):
        raise ParameterError("generic takes --rep N20 or N21")
    rep = config.rep.value
    gens = generic.generic_generators(rep, config.n)
    doc: dict[str, Any] = {"rep": rep, "n": config.n}
    if config.specialize is None:
        doc["ring"] = "laurent"
        doc["matrices"] = {str(i): g for i, g in enumerate(gens, start=1)}
    else:
        doc["ring"] = "cyclotomic"
        doc["r"] = config.specialize
        doc["matrices"] = {str(i): generic.specialize_matrix(g, config.specialize) for i, g in enumerate(gens, start=1)}
    return doc


def run_hecke(config: RunConfig) -> dict:
    rep = config.rep.value if config.rep in (RepKind.N20, RepKind.N21) else "N20"
    if config.check is HeckeCheck.MINPOLY:
        doc = hecke.min_pol_check(config.n, config.r, rep)
        ok = doc["annihilates"]
    elif config.check is HeckeCheck.ORDER:
        doc = hecke.eigenvalue_report(config.n, config.r, rep)
        ok = doc["order_divides_2r"]
    else:
        doc = hecke.cubic_quotient_42()
        ok = doc["matches"]
    if not ok:
        raise RunFailed(doc)
    return doc


def run_verify(config: RunConfig) -> dict:
    report = run_verify_all(config.max_n, config.max_r, config.threads)
    if not report["passed"]:
        raise RunFailed(dict(report))
    return dict(report)


HANDLERS: dict[Command, Callable[[RunConfig], dict]] = {
    Command.DIMS: run_dims,
    Command.MATRICES: run_matrices,
    Command.TWIST: run_twist,
    Command.SPLIT_CHECK: run_split_check,
    Command.GENERIC: run_generic,
    Command.HECKE: run_hecke,
    Command.VERIFY_ALL: run_verify,
}


def run(config: RunConfig) -> tuple[int, dict]:
    """Dispatch a validated config; returns (exit status, document)."""
    try:
        return 0, HANDLERS[config.command](config)
    except RunFailed as exc:
        return 1, exc.doc
    except ParameterError:
        raise
    except RhorepError as exc:
        return 1, {"error": type(exc).__name__, "message": str(exc), **(getattr(exc, "detail", None) or {})}


# click surface

def _table(doc: dict) -> str:
    if "results" in doc:
        rows = [(res["check"], ",".join(f"{k}={v}" for k, v in sorted(res["params"].items())), "ok" if res["passed"] else "FAIL") for res in doc["results"]]
        return tabulate(rows, headers=["check", "params", "status"])
    return tabulate([(k, v) for k, v in sorted(encode(doc).items()) if not isinstance(v, (dict, list))], headers=["key", "value"])


def _execute(ctx: click.Context, **fields: Any) -> None:
    fields = {k: v for k, v in fields.items() if v is not None}
    try:
        config = RunConfig(**fields)
    except ValidationError as exc:
        raise click.UsageError("; ".join(err["msg"] for err in exc.errors()), ctx=ctx) from exc
    try:
        status, doc = run(config)
    except ParameterError as exc:
        raise click.UsageError(str(exc), ctx=ctx) from exc

    if config.output_format is OutputFormat.TABLE:
        click.echo(_table(doc))
        if config.output:
            write_document(doc, config.output)
    else:
        write_document(doc, config.output)
    if status:
        click.secho(f"❌ {config.command.value} failed", fg="red", err=True)
        ctx.exit(status)


def _common(func):
    func = click.option("--output", "-o", default=None, help="Write the JSON document here instead of stdout")(func)
    func = click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]), default="json")(func)
    return func


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Debug logging")
@click.version_option(__version__)
def cli(verbose: bool):
    """Braid group representations from the Steinberg module at roots of unity."""
    level = logging.DEBUG if verbose else getattr(logging, default_log_level(), logging.WARNING)
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s")


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--l", "l", type=int, required=True)
@click.option("--r", type=int, required=True)
@_common
@click.pass_context
def dims(ctx, n, l, r, output, output_format):
    """kappa and the A, B and W dimensions of V_{n,l}."""
    _execute(ctx, command="dims", n=n, l=l, r=r, output=output, output_format=output_format)


@cli.command()
@click.option("--rep", type=click.Choice([k.value for k in RepKind]), default="V")
@click.option("--n", type=int, required=True)
@click.option("--l", "l", type=int, default=0)
@click.option("--r", type=int, required=True)
@click.option("--word", default=None, help="Comma-separated signed generators, e.g. '1,2,-1'")
@click.option("--float-check", is_flag=True, help="Cross-check against the floating-point R-matrix")
@_common
@click.pass_context
def matrices(ctx, rep, n, l, r, word, float_check, output, output_format):
    """Generator matrices, or the matrix of one braid word."""
    _execute(ctx, command="matrices", rep=rep, n=n, l=l, r=r, word=word, float_check=float_check, output=output, output_format=output_format)


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--l", "l", type=int, required=True)
@click.option("--r", type=int, required=True)
@_common
@click.pass_context
def twist(ctx, n, l, r, output, output_format):
    """The full twist on N_{n,l} against its closed form."""
    _execute(ctx, command="twist", n=n, l=l, r=r, output=output, output_format=output_format)


@cli.command("split-check")
@click.option("--rep", type=click.Choice(["N20", "N21", "SR"]), required=True)
@click.option("--n", type=int, required=True)
@click.option("--l", "l", type=int, default=2)
@click.option("--r", type=int, required=True)
@_common
@click.pass_context
def split_check(ctx, rep, n, l, r, output, output_format):
    """Look for an invariant complement; reports the rank certificate either way."""
    _execute(ctx, command="split-check", rep=rep, n=n, l=l, r=r, output=output, output_format=output_format)


@cli.command("generic")
@click.option("--rep", type=click.Choice(["N20", "N21"]), required=True)
@click.option("--n", type=int, required=True)
@click.option("--specialize", type=int, default=None, help="Evaluate at the root of unity for this r")
@_common
@click.pass_context
def generic_cmd(ctx, rep, n, specialize, output, output_format):
    """Three-variable N20 / N21 generators over Z[q, s, t]."""
    _execute(ctx, command="generic", rep=rep, n=n, specialize=specialize, output=output, output_format=output_format)


@cli.command("hecke")
@click.option("--check", type=click.Choice([c.value for c in HeckeCheck]), required=True)
@click.option("--rep", type=click.Choice(["N20", "N21"]), default="N20")
@click.option("--n", type=int, default=4)
@click.option("--r", type=int, default=5)
@_common
@click.pass_context
def hecke_cmd(ctx, check, rep, n, r, output, output_format):
    """Minimal polynomial, generator order, or the r=3 cubic Hecke quotient."""
    _execute(ctx, command="hecke", check=check, rep=rep, n=n, r=r, output=output, output_format=output_format)


@cli.command("verify-all")
@click.option("--max-n", type=int, default=4)
@click.option("--max-r", type=int, default=5)
@click.option("--threads", type=int, default=None, help="Worker threads (default RHOREP_THREADS)")
@_common
@click.pass_context
def verify_all(ctx, max_n, max_r, threads, output, output_format):
    """Run every check over n <= max-n, r <= max-r."""
    _execute(
        ctx,
        command="verify-all",
        max_n=max_n,
        max_r=max_r,
        threads=threads or default_threads(),
        output=output,
        output_format=output_format,
    )


def main(argv: Optional[list[str]] = None) -> int:
    try:
        cli.main(args=argv, prog_name="rhorep", standalone_mode=True)
    except SystemExit as exc:
        return int(exc.code or 0)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
