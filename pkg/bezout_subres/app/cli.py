import logging
import os

import click
import bezout_subres
from bezout_subres.app import bench as bench_harness
from bezout_subres.app.system_file import load_system_file, system_from_entries
from bezout_subres.services.poly import parse_rat
from bezout_subres.services.roots import RootSystem, oracle_subresultant
from bezout_subres.services.subresultant import (
    DeltaIndex,
    Formula,
    degree_report,
    iter_deltas,
    parse_delta,
    subresultant,
    subresultant_matrix,
)

CLI_LOG_LEVELS = ["debug", "info", "warn", "error"]
CLI_DEFAULT_LOG_LEVEL = "warn"
CLI_BENCH_LOG_LEVEL = "info"
LOG_FORMAT = (
    "%(asctime)s.%(msecs)03d {%(filename)s:%(lineno)d} %(levelname)s: %(message)s"
)
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
LOG_FILE_NAME = "bezout-subres"

DEFAULT_COEFF_BOUND = 9
DEFAULT_TRIALS = 1
DEFAULT_SEED = 42
DEFAULT_OUT = "./out/bench.csv"
DELTA_LIST_SEP = ";"


def log_level_option(default=CLI_DEFAULT_LOG_LEVEL):
    return click.option(
        "--log-level",
        default=default,
        type=click.Choice(CLI_LOG_LEVELS, case_sensitive=False),
        help=f"Logging level - one of {','.join(CLI_LOG_LEVELS)}",
    )


log_to_file_option = click.option(
    "--log-to-file/--no-log-to-file", required=False, default=False
)


def apply_log_config(log_level_str, log_to_file=False, module=bezout_subres.__name__):
    if not log_level_str:
        return

    log_level_str = log_level_str.strip().upper()
    if log_level_str == "WARN":
        log_level_str = "WARNING"
    if not hasattr(logging, log_level_str):
        raise ValueError(f"Unknown log level: {log_level_str}")

    log_level = getattr(logging, log_level_str)
    log_formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT)

    logger = logging.getLogger(module)
    logger.setLevel(log_level)

    if log_to_file:
        log_path = os.path.abspath(os.path.join(".", f"{LOG_FILE_NAME}.log"))
        attached = any(
            isinstance(h, logging.FileHandler) and h.baseFilename == log_path
            for h in logger.handlers
        )
        if not attached:
            file_handler = logging.FileHandler(log_path)
            file_handler.setFormatter(log_formatter)
            logger.addHandler(file_handler)

    logging.basicConfig(format=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)


# --- input helpers ---


def _load_system(system_path, poly_texts):
    if bool(system_path) == bool(poly_texts):
        raise click.UsageError("Give exactly one of --system or --poly (repeatable)")
    try:
        if system_path:
            return load_system_file(system_path)
        return system_from_entries(list(poly_texts))
    except (OSError, ValueError) as e:
        raise click.ClickException(str(e))


def _delta_index(text, system):
    try:
        delta = DeltaIndex.for_system(parse_delta(text), system)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--delta")
    if delta.is_zero():
        raise click.BadParameter("delta must be nonzero", param_hint="--delta")
    return delta


def _parse_deltas(text, degrees):
    if text is None or text.strip().lower() == "all":
        return None
    try:
        deltas = tuple(parse_delta(part) for part in text.split(DELTA_LIST_SEP))
        for delta in deltas:
            if not DeltaIndex(delta, degrees).total:
                raise ValueError("delta must be nonzero")
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--deltas")
    return deltas


def _parse_int_list(text, param_hint):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise click.BadParameter(
            f"expected comma-separated integers, got {text!r}", param_hint=param_hint
        )


@click.group()
def cli() -> str:
    pass


# --- computation ---


@cli.command("compute")
@click.option("--system", "system_path", help="Path to a JSON system file")
@click.option("--poly", "poly_texts", multiple=True, help="Inline polynomial, F0 first")
@click.option("--delta", required=True, help="Comma-separated delta, e.g. 2,2")
@click.option(
    "--formula",
    type=click.Choice([f.value for f in Formula], case_sensitive=False),
    default=Formula.HYBRID.value,
    help="Determinant formula",
)
@click.option("--show-matrix", is_flag=True, default=False, help="Print the matrix")
@click.option("--verbose", is_flag=True, default=False, help="Print scale exponents")
@log_level_option()
@log_to_file_option
def compute(
    system_path, poly_texts, delta, formula, show_matrix, verbose, log_level, log_to_file
):
    """Compute the delta-th subresultant S_delta of a polynomial system"""
    apply_log_config(log_level, log_to_file=log_to_file)

    system = _load_system(system_path, poly_texts)
    delta = _delta_index(delta, system)
    formula = Formula(formula.lower())

    if show_matrix:
        click.echo(str(subresultant_matrix(system, delta, formula)))
    if verbose:
        for row in degree_report(system, delta):
            click.echo(
                f"{row['formula']}: a0^{row['scale_exponent']}, "
                f"{row['matrix_size']}x{row['matrix_size']}, eps={row['eps']}"
            )

    click.echo(str(subresultant(system, delta, formula)))


@cli.command("check")
@click.option("--system", "system_path", help="Path to a JSON system file")
@click.option("--poly", "poly_texts", multiple=True, help="Inline polynomial, F0 first")
@click.option("--delta", help="Comma-separated delta, e.g. 2,2")
@click.option("--all-deltas", is_flag=True, default=False, help="Check every valid delta")
@click.option("--roots", help="Comma-separated distinct roots replacing F0")
@click.option("--lc", default="1", help="Leading coefficient of F0 with --roots")
@log_level_option()
@log_to_file_option
@click.pass_context
def check(
    ctx, system_path, poly_texts, delta, all_deltas, roots, lc, log_level, log_to_file
):
    """Check that all formulas (and the roots oracle with --roots) agree"""
    apply_log_config(log_level, log_to_file=log_to_file)

    if bool(delta) == bool(all_deltas):
        raise click.UsageError("Give exactly one of --delta or --all-deltas")

    system = _load_system(system_path, poly_texts)
    root_system = None
    if roots:
        try:
            root_system = RootSystem(
                parse_rat(lc),
                tuple(parse_rat(r) for r in roots.split(",")),
                system.polys[1:],
            )
            system = root_system.system()
        except ValueError as e:
            raise click.UsageError(str(e))

    if all_deltas:
        deltas = [DeltaIndex.for_system(d, system) for d in iter_deltas(system.degrees)]
    else:
        deltas = [_delta_index(delta, system)]

    failures = 0
    for delta_idx in deltas:
        results = {str(f): subresultant(system, delta_idx, f) for f in Formula}
        if root_system is not None:
            results["oracle"] = oracle_subresultant(root_system, delta_idx)

        if len(set(results.values())) == 1:
            click.echo(f"PASS {delta_idx}: {next(iter(results.values()))}")
        else:
            failures += 1
            details = ", ".join(f"{name}={value}" for name, value in results.items())
            click.echo(f"FAIL {delta_idx}: {details}")

    click.echo(f"{len(deltas) - failures}/{len(deltas)} passed")
    ctx.exit(1 if failures else 0)


# --- benchmarking ---


@cli.command("bench")
@click.option("--degrees", required=True, help="Comma-separated degrees, d0 first")
@click.option("--trials", default=DEFAULT_TRIALS, type=int, show_default=True)
@click.option("--seed", default=DEFAULT_SEED, type=int, show_default=True)
@click.option("--coeff-bound", default=DEFAULT_COEFF_BOUND, type=int, show_default=True)
@click.option(
    "--deltas", default="all", help="'all' or deltas separated by ';', e.g. 2,2;1,3"
)
@click.option("--out", default=DEFAULT_OUT, show_default=True, help="CSV output path")
@click.option("--workers", default=0, type=click.IntRange(min=0), help="Parallel workers")
@log_level_option(CLI_BENCH_LOG_LEVEL)
@log_to_file_option
@click.pass_context
def bench(
    ctx, degrees, trials, seed, coeff_bound, deltas, out, workers, log_level, log_to_file
):
    """Time matrix generation and determinant calculation for every formula"""
    apply_log_config(log_level, log_to_file=log_to_file)

    degrees = _parse_int_list(degrees, "--degrees")
    try:
        spec = bench_harness.BenchSpec(
            degrees=degrees,
            coeff_bound=coeff_bound,
            trials=trials,
            seed=seed,
            deltas=_parse_deltas(deltas, degrees),
            workers=workers,
        )
    except ValueError as e:
        raise click.UsageError(str(e))

    try:
        records = bench_harness.run_bench(spec)
    except bench_harness.SubresultantMismatch as e:
        path = bench_harness.write_mismatch_bundle(e, os.path.dirname(out))
        click.echo(f"MISMATCH: {e}", err=True)
        click.echo(f"Reproduction bundle written to {path}", err=True)
        ctx.exit(1)

    try:
        bench_harness.write_csv(records, out)
    except OSError as e:
        raise click.ClickException(str(e))

    click.echo(bench_harness.format_summary(bench_harness.summarize(records)))
    click.echo(f"{len(records)} record(s) written to {out}")


@cli.command("report")
@click.option("--csv", "csv_path", required=True, help="Bench CSV to summarize")
@log_level_option()
@log_to_file_option
def report(csv_path, log_level, log_to_file):
    """Summarize a bench CSV as per-formula T / M / D totals"""
    apply_log_config(log_level, log_to_file=log_to_file)
    try:
        records = bench_harness.read_csv(csv_path)
    except (OSError, ValueError) as e:
        raise click.ClickException(str(e))
    click.echo(bench_harness.format_summary(bench_harness.summarize(records)))


if __name__ == "__main__":
    cli()
