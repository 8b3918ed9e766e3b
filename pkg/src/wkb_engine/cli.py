#!/usr/bin/env python3
"""
WKB Engine - Command Line Interface

This CLI drives the symbol calculus (star products, inversion, square roots,
adjoints), quantizes symplectic maps into automorphism records, and verifies
descent data of coverings and liens.

Exit status: 0 on success, 1 when a verification fails, 2 on input errors.
"""

import sys
from dataclasses import dataclass

import click
import yaml
from loguru import logger
from rich.console import Console
from rich.table import Table
from rich.text import Text

from wkb_engine import __version__
from wkb_engine.descent import (
    VerificationSummary,
    check_lien_isomorphism,
    compute_lien_3cocycle,
    lien_from_covering,
    verify_covering,
    verify_lien_condition,
)
from wkb_engine.descent.lien import LienData
from wkb_engine.errors import (
    CoveringInconsistentError,
    DimensionMismatchError,
    DocumentError,
    ExpressionSyntaxError,
    IndexOutOfRangeError,
    NonCentralDefectError,
    NotInnerError,
    NotInvertibleError,
    NotSymplecticError,
    QuantizationError,
    SquareRootError,
    WkbEngineError,
)
from wkb_engine.models import (
    CoveringDocument,
    LienDocument,
    LienIsoDocument,
    MapSpecDocument,
    RecordDocument,
)
from wkb_engine.parsers import (
    covering_from_document,
    dump_json,
    format_poly,
    format_symbol,
    lien_from_document,
    lien_iso_from_document,
    load_json,
    map_spec_from_document,
    read_document,
    record_from_document,
    record_to_document,
    summary_to_document,
    symbol_to_document,
)
from wkb_engine.parsers.codec import validate_document
from wkb_engine.polycore import format_rational
from wkb_engine.quantize import apply_automorphism, quantize_map, recognize_inner
from wkb_engine.symbol import (
    WkbSymbol,
    adjoint,
    central_part,
    commutator,
    invert,
    order_and_principal,
    square_root,
    star_product,
)
from wkb_engine.utils import infer_dim, load_operand, load_settings, setup_logger

console = Console()
error_console = Console(stderr=True)

# Configure logger on module import
setup_logger()

INPUT_ERRORS = (
    ExpressionSyntaxError,
    DocumentError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    NotSymplecticError,
    NotInvertibleError,
    SquareRootError,
)
VERIFICATION_ERRORS = (
    NonCentralDefectError,
    NotInnerError,
    CoveringInconsistentError,
    QuantizationError,
)


@dataclass
class RunOptions:
    """Global options after config defaults; depth_override also replaces document depths."""

    dim: int | None
    depth: int
    output: str
    workers: int
    depth_override: int | None = None


class EngineGroup(click.Group):
    """Command group mapping engine errors to exit statuses."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (click.ClickException, click.exceptions.Exit, click.exceptions.Abort):
            raise
        except INPUT_ERRORS as e:
            _fail(ctx, 2, e)
        except VERIFICATION_ERRORS as e:
            _fail(ctx, 1, e)
        except (FileNotFoundError, ValueError, yaml.YAMLError) as e:
            _fail(ctx, 2, e)
        except WkbEngineError as e:
            _fail(ctx, 1, e)
        except Exception as e:
            error_console.print(f"Error: {e}", style="red", markup=False, highlight=False)
            logger.exception("Unexpected error")
            ctx.exit(1)


def _fail(ctx: click.Context, status: int, error: Exception) -> None:
    error_console.print(f"Error: {error}", style="red", markup=False, highlight=False)
    logger.debug(f"Exit {status} after {type(error).__name__}")
    ctx.exit(status)


def common_options(command):
    """--dim/--depth/--output, accepted after the subcommand as well."""
    command = click.option("--output", type=click.Choice(["json", "text"]), default=None,
                           help="Output format")(command)
    command = click.option("--depth", type=click.IntRange(min=0), default=None,
                           help="Window depth K")(command)
    command = click.option("--dim", type=click.IntRange(min=0), default=None,
                           help="Number of variable pairs")(command)
    return command


def _options(
    ctx: click.Context, dim: int | None, depth: int | None, output: str | None
) -> RunOptions:
    base: RunOptions = ctx.obj["options"]
    return RunOptions(
        dim=base.dim if dim is None else dim,
        depth=base.depth if depth is None else depth,
        output=base.output if output is None else output,
        workers=base.workers,
        depth_override=base.depth_override if depth is None else depth,
    )


@click.group(cls=EngineGroup)
@click.version_option(version=__version__)
@click.option("--config", "config_path", type=click.Path(), default=None,
              help="YAML configuration file")
@click.option("--log-level", default=None, help="Log level (DEBUG, INFO, WARNING, ERROR)")
@common_options
@click.pass_context
def cli(ctx, config_path, log_level, dim, depth, output):
    """
    WKB Engine

    Exact arithmetic for truncated WKB operator symbols: star products,
    quantized symplectic maps and verification of descent data.
    """
    ctx.ensure_object(dict)
    settings = load_settings(config_path)
    setup_logger(level=log_level or settings.logging.level, log_file=settings.logging.file)
    ctx.obj["options"] = RunOptions(
        dim=dim,
        depth=settings.engine.depth if depth is None else depth,
        output=settings.engine.output if output is None else output,
        workers=settings.engine.workers,
        depth_override=depth,
    )


# Symbol calculus


@cli.command()
@click.argument("a")
@click.argument("b")
@common_options
@click.pass_context
def star(ctx, a, b, dim, depth, output):
    """Star product A ⋆ B."""
    opts = _options(ctx, dim, depth, output)
    p, q = _operands(opts, a, b)
    _emit_symbol(opts, star_product(p, q))


@cli.command("commutator")
@click.argument("a")
@click.argument("b")
@common_options
@click.pass_context
def commutator_cmd(ctx, a, b, dim, depth, output):
    """Commutator [A, B] = A ⋆ B - B ⋆ A."""
    opts = _options(ctx, dim, depth, output)
    p, q = _operands(opts, a, b)
    _emit_symbol(opts, commutator(p, q))


@cli.command("invert")
@click.argument("p")
@common_options
@click.pass_context
def invert_cmd(ctx, p, dim, depth, output):
    """Star inverse of P (principal symbol a nonzero constant)."""
    opts = _options(ctx, dim, depth, output)
    (symbol,) = _operands(opts, p)
    _emit_symbol(opts, invert(symbol))


@cli.command()
@click.argument("p")
@click.option("--sign", type=click.Choice(["+", "-"]), default="+",
              help="Branch of the square root of the principal constant")
@common_options
@click.pass_context
def sqrt(ctx, p, sign, dim, depth, output):
    """Star square root of P."""
    opts = _options(ctx, dim, depth, output)
    (symbol,) = _operands(opts, p)
    _emit_symbol(opts, square_root(symbol, sign=1 if sign == "+" else -1))


@cli.command("adjoint")
@click.argument("p")
@common_options
@click.pass_context
def adjoint_cmd(ctx, p, dim, depth, output):
    """Formal adjoint P* under the transpose anti-involution."""
    opts = _options(ctx, dim, depth, output)
    (symbol,) = _operands(opts, p)
    _emit_symbol(opts, adjoint(symbol))


@cli.command()
@click.argument("p")
@common_options
@click.pass_context
def order(ctx, p, dim, depth, output):
    """Order and principal symbol of P."""
    opts = _options(ctx, dim, depth, output)
    (symbol,) = _operands(opts, p)
    info = order_and_principal(symbol)
    if opts.output == "json":
        click.echo(dump_json({"order": info.order, "principal": format_poly(info.principal)}))
    else:
        click.echo(str(info))


@cli.command()
@click.argument("p")
@common_options
@click.pass_context
def central(ctx, p, dim, depth, output):
    """Split P into its central part and the non-constant residual."""
    opts = _options(ctx, dim, depth, output)
    (symbol,) = _operands(opts, p)
    scalars, residual = central_part(symbol)
    if opts.output == "json":
        click.echo(dump_json({
            "central": symbol_to_document(scalars).model_dump(),
            "residual": symbol_to_document(residual).model_dump(),
            "is_central": residual.is_zero(),
        }))
    else:
        click.echo(f"central: {format_symbol(scalars)}")
        click.echo(f"residual: {format_symbol(residual)}")


# Quantization


@cli.command()
@click.argument("mapfile", type=click.Path())
@common_options
@click.pass_context
def quantize(ctx, mapfile, dim, depth, output):
    """Quantize the symplectic map in MAPFILE to an automorphism record."""
    opts = _options(ctx, dim, depth, output)
    spec = map_spec_from_document(read_document(mapfile, MapSpecDocument))
    _check_dim(opts, spec.dim, mapfile)
    record = quantize_map(spec, opts.depth)
    if opts.output == "json":
        click.echo(dump_json(record_to_document(record).model_dump(mode="json")))
        return
    for i, image in enumerate(record.x_images, start=1):
        click.echo(f"X{i} = {format_symbol(image)}")
    for i, image in enumerate(record.u_images, start=1):
        click.echo(f"U{i} = {format_symbol(image)}")
    click.echo(f"a = {format_poly(record.primitive)}")
    click.echo(f"c = {format_rational(record.c)}")


@cli.command()
@click.argument("record_file", metavar="RECORD", type=click.Path())
@click.argument("p")
@common_options
@click.pass_context
def apply(ctx, record_file, p, dim, depth, output):
    """Apply the automorphism RECORD to P."""
    opts = _options(ctx, dim, depth, output)
    record = record_from_document(read_document(record_file, RecordDocument))
    _check_dim(opts, record.dim, record_file)
    symbol = load_operand(p, record.dim, record.depth)
    _emit_symbol(opts, apply_automorphism(record, symbol))


@cli.command()
@click.argument("record_file", metavar="RECORD", type=click.Path())
@common_options
@click.pass_context
def recognize(ctx, record_file, dim, depth, output):
    """Recognize RECORD as Ad(P) for a symbol P."""
    opts = _options(ctx, dim, depth, output)
    record = record_from_document(read_document(record_file, RecordDocument))
    _check_dim(opts, record.dim, record_file)
    result = recognize_inner(record)
    if opts.output == "json":
        click.echo(dump_json({
            "inner": symbol_to_document(result.inner).model_dump(),
            "central_factor": symbol_to_document(result.central_factor).model_dump(),
            "translation": format_rational(result.translation),
            "note": result.note,
        }))
    else:
        click.echo(f"P = {format_symbol(result.inner)}")
        click.echo(f"zeta = {format_symbol(result.central_factor)}")
        click.echo(f"c = {format_rational(result.translation)}")
        click.echo(result.note)


# Descent


@cli.command()
@click.argument("coverfile", type=click.Path())
@common_options
@click.pass_context
def descent(ctx, coverfile, dim, depth, output):
    """Verify the triple and quadruple descent conditions of a covering."""
    opts = _options(ctx, dim, depth, output)
    cov = covering_from_document(_covering_document(coverfile, opts.depth_override))
    _check_dim(opts, cov.dim, coverfile)
    _emit_summary(ctx, opts, verify_covering(cov, workers=opts.workers))


@cli.command()
@click.argument("datafile", type=click.Path())
@common_options
@click.pass_context
def lien3(ctx, datafile, dim, depth, output):
    """Compute the lien 3-cocycle of a lien or covering document."""
    opts = _options(ctx, dim, depth, output)
    lien = _load_lien(datafile, opts.depth_override, opts.workers)
    _check_dim(opts, lien.dim, datafile)
    condition = verify_lien_condition(lien)
    cocycle = compute_lien_3cocycle(lien)
    _emit_summary(ctx, opts, VerificationSummary(condition.reports + cocycle.summary.reports))


@cli.command()
@click.argument("source_file", metavar="A", type=click.Path())
@click.argument("target_file", metavar="B", type=click.Path())
@click.argument("isofile", type=click.Path())
@common_options
@click.pass_context
def lieniso(ctx, source_file, target_file, isofile, dim, depth, output):
    """Check an isomorphism ISOFILE between the liens A and B."""
    opts = _options(ctx, dim, depth, output)
    source = _load_lien(source_file, opts.depth_override, opts.workers)
    target = _load_lien(target_file, opts.depth_override, opts.workers)
    _check_dim(opts, source.dim, source_file)
    _check_dim(opts, target.dim, target_file)
    iso = lien_iso_from_document(
        read_document(isofile, LienIsoDocument), min(source.depth, target.depth)
    )
    _emit_summary(ctx, opts, check_lien_isomorphism(source, target, iso))


# Helper functions


def _operands(opts: RunOptions, *texts: str) -> list[WkbSymbol]:
    dim = infer_dim(list(texts)) if opts.dim is None else opts.dim
    return [load_operand(text, dim, opts.depth) for text in texts]


def _check_dim(opts: RunOptions, actual: int, source: str) -> None:
    if opts.dim is not None and opts.dim != actual:
        raise DimensionMismatchError(actual, opts.dim, f"{source} and --dim")


def _covering_document(path: str, depth: int | None) -> CoveringDocument:
    document = read_document(path, CoveringDocument)
    if depth is not None:
        document = document.model_copy(update={"depth": depth})
    return document


def _load_lien(path: str, depth: int | None, workers: int) -> LienData:
    """Lien document if it carries sections, otherwise the lien of a covering."""
    raw = load_json(path)
    if isinstance(raw, dict) and "sections" in raw:
        document = validate_document(LienDocument, raw)
        if depth is not None:
            document = document.model_copy(update={"depth": depth})
        return lien_from_document(document)
    covering = validate_document(CoveringDocument, raw)
    if depth is not None:
        covering = covering.model_copy(update={"depth": depth})
    return lien_from_covering(covering_from_document(covering), workers=workers)


def _emit_symbol(opts: RunOptions, symbol: WkbSymbol) -> None:
    if opts.output == "json":
        click.echo(dump_json(symbol_to_document(symbol).model_dump()))
    else:
        click.echo(format_symbol(symbol))


def _emit_summary(ctx: click.Context, opts: RunOptions, summary: VerificationSummary) -> None:
    if opts.output == "json":
        click.echo(dump_json(summary_to_document(summary).model_dump()))
    else:
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Check")
        table.add_column("Indices")
        table.add_column("Verdict")
        table.add_column("Witness")
        for report in summary.reports:
            style = "green" if report.passed else "red"
            witness = "; ".join(f"{key}: {value}" for key, value in report.witness.items())
            table.add_row(
                Text(report.check),
                Text(" ".join(report.indices)),
                Text(report.verdict.value, style=style),
                Text(witness),
            )
        if summary.reports:
            console.print(table)
        click.echo(summary.headline)
    if not summary.passed:
        ctx.exit(1)


def main():
    """Main entry point for the CLI."""
    try:
        cli(obj={})
    except Exception as e:
        error_console.print(f"\n[red]Error: {e}[/red]")
        logger.exception("Unexpected error")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
