import logging
import sys

import click
import numpy as np
from dotenv import load_dotenv, find_dotenv
from termcolor import colored

# modules created for this project
from Benchmark import (
    run_benchmark,
    format_summary_table,
    format_ablation_table,
    has_ablation,
    write_benchmark_table,
    write_benchmark_records,
    compare_on_toys,
    write_toy_comparison,
)
from DataAccess import (
    load_labelled_csv,
    save_csv,
    write_rows,
    write_scores,
    list_dataset_files,
    save_model_file,
    load_model_file,
)
from Detectors import make_detector, detector_from_dict
from DetectorErrors import (
    DetectorError,
    InvalidParameterError,
    DataError,
    DataFileError,
    DimensionMismatchError,
    NumericalError,
)
from Evaluation import percentile_threshold
from ParameterValidation import verify_integer
from RunConfig import RunConfig
from ToyDatasets import generate_toy
import constants

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def configure_logging(verbosity):
    logging.basicConfig(format=LOG_FORMAT)
    logging.getLogger().setLevel(LOG_LEVELS.get(verbosity, logging.DEBUG))


def exit_code_for(error):
    """maps an error family to its process exit code"""
    if isinstance(error, (InvalidParameterError, click.UsageError)):
        return constants.EXIT_USAGE_ERROR
    if isinstance(error, NumericalError):
        return constants.EXIT_NUMERICAL_ERROR
    if isinstance(error, (DataError, click.FileError)):
        return constants.EXIT_DATA_ERROR
    return constants.EXIT_USAGE_ERROR


def report_error(message):
    click.echo(colored(f"error: {message}", "red"), err=True)


def detector_options(function):
    """flags selecting and configuring one detector"""
    options = [
        click.option("--detector", type=click.Choice(constants.DETECTOR_KINDS), default=None, help="detector kind [default: krpd]"),
        click.option("--gamma", type=float, default=None, help="RBF kernel parameter"),
        click.option("--components", type=int, default=None, help="kernel PCA components M"),
        click.option("--directions", type=int, default=None, help="random directions L"),
        click.option("--features", type=int, default=None, help="random Fourier features D"),
        click.option("--neighbors", type=int, default=None, help="k of the kNN baseline"),
        click.option("--seed", type=int, default=None, help="seed of random directions and features [default: 0]"),
        click.option("--eigensolver", type=click.Choice(constants.EIGENSOLVERS), default=None, help="kernel PCA eigensolver [default: eigh]"),
        click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="yaml file with run settings"),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def grid_points(bounds, resolution):
    """returns resolution^2 x 2 matrix of a uniform grid over
    (x_min, x_max, y_min, y_max), x varies fastest"""
    x_min, x_max, y_min, y_max = bounds
    if x_min >= x_max or y_min >= y_max:
        raise InvalidParameterError("bounds", tuple(bounds), "x_min < x_max and y_min < y_max")
    verify_integer("resolution", resolution, 2)
    xs = np.linspace(x_min, x_max, resolution)
    ys = np.linspace(y_min, y_max, resolution)
    grid_x, grid_y = np.meshgrid(xs, ys)
    return np.column_stack([grid_x.ravel(), grid_y.ravel()])


@click.group()
@click.option("-v", "--verbose", count=True, help="more log output, repeatable")
def cli(verbose):
    """kernel random projection depth outlier detection"""
    configure_logging(verbose)


@cli.command()
@click.option("--kind", type=click.Choice(constants.TOY_KINDS), required=True, help="toy cloud shape")
@click.option("--seed", type=int, default=constants.DEFAULT_SEED, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def generate(kind, seed, out_path):
    """writes a labelled toy cloud of 300 inliers and 100 outliers"""
    save_csv(generate_toy(kind, seed), out_path)


@cli.command("fit-score")
@click.option("--train", "train_path", type=click.Path(dir_okay=False), required=True)
@click.option("--query", "query_path", type=click.Path(dir_okay=False), required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
@click.option("--save-model", "model_path", type=click.Path(dir_okay=False), default=None, help="also write the fitted detector as yaml")
@detector_options
def fit_score(train_path, query_path, out_path, model_path, config_path, **flags):
    """fits a detector on the train csv and scores every query row"""
    config = RunConfig.from_sources(config_path, **flags)
    train = load_labelled_csv(train_path)
    detector = make_detector(config.detector, config.hyperparameters(), config.seed)
    detector.fit(train)
    query = load_labelled_csv(query_path)
    scores = detector.score(query.features)
    write_scores(out_path, scores, query.labels)
    if model_path is not None:
        save_model_file(detector.to_dict(), model_path)
    logger.info("wrote %d %s scores to %s", query.n_samples, detector.name, out_path)


@cli.command()
@click.option("--model", "model_path", type=click.Path(dir_okay=False), required=True)
@click.option("--query", "query_path", type=click.Path(dir_okay=False), required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def score(model_path, query_path, out_path):
    """scores a query csv with a model file written by fit-score"""
    detector = detector_from_dict(load_model_file(model_path), model_path)
    query = load_labelled_csv(query_path)
    write_scores(out_path, detector.score(query.features), query.labels)


@cli.command()
@click.option("--train", "train_path", type=click.Path(dir_okay=False), required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
@click.option("--bounds", type=float, nargs=4, default=None, help="x_min x_max y_min y_max [default: -6 6 -6 6]")
@click.option("--resolution", type=int, default=None, help="grid points per axis [default: 200]")
@click.option("--contamination", type=float, default=None, help="outlier fraction of the threshold [default: 0.25]")
@detector_options
def grid(train_path, out_path, bounds, resolution, contamination, config_path, **flags):
    """writes x,y,score rows over a 2-d grid and the threshold footer"""
    config = RunConfig.from_sources(config_path, contamination=contamination, **flags)
    bounds = bounds or constants.GRID_BOUNDS
    resolution = constants.GRID_RESOLUTION if resolution is None else resolution
    points = grid_points(bounds, resolution)
    train = load_labelled_csv(train_path)
    if train.n_dims != 2:
        raise DimensionMismatchError(2, train.n_dims)
    detector = make_detector(config.detector, config.hyperparameters(), config.seed)
    detector.fit(train)
    threshold = percentile_threshold(detector.score(train.features), config.contamination)
    scores = detector.score(points)
    rows = [[float(x), float(y), float(value)] for (x, y), value in zip(points, scores)]
    footer = constants.GRID_THRESHOLD_FOOTER.format(constants.CSV_FLOAT_FORMAT.format(threshold))
    write_rows(out_path, ["x", "y", constants.SCORE_COLUMN], rows, footer)


@cli.command()
@click.option("--data-dir", "data_dir", type=click.Path(file_okay=False), required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True, help="csv table")
@click.option("--records", "records_path", type=click.Path(dir_okay=False), default=None, help="yaml records per dataset and detector")
@click.option("--detectors", default=None, help="comma separated detector kinds [default: all]")
@click.option("--trials", type=int, default=None, help="independent trials [default: 5]")
@click.option("--budget", type=int, default=None, help="search trials per detector [default: 25]")
@click.option("--directions", type=int, default=None, help="random directions L [default: 1000]")
@click.option("--seed", type=int, default=None, help="[default: 0]")
@click.option("--search-seed", type=int, default=None)
@click.option("--split-seed", type=int, default=None)
@click.option("--timing/--no-timing", default=True, show_default=True, help="record wall time")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None)
def benchmark(data_dir, out_path, records_path, timing, config_path, **flags):
    """runs every detector on every labelled csv in a directory"""
    config = RunConfig.from_sources(config_path, **flags)
    paths = list_dataset_files(data_dir)
    if not paths:
        raise DataFileError(data_dir, "no csv datasets found")
    cells = run_benchmark(
        paths,
        config.detectors,
        config.trials,
        config.seed,
        config.budget,
        config.directions,
        config.split_seed,
        config.search_seed,
    )
    write_benchmark_table(cells, out_path, timing)
    if records_path is not None:
        write_benchmark_records(cells, records_path, timing)
    click.echo(format_summary_table(cells))
    if has_ablation(cells):
        click.echo()
        click.echo(format_ablation_table(cells))


@cli.command("toy-compare")
@click.option("--seed", type=int, default=constants.DEFAULT_SEED, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def toy_compare(seed, out_path):
    """RPD, KRPD and KPCA with fixed settings on the four toy clouds"""
    comparisons = compare_on_toys(seed=seed)
    write_toy_comparison(comparisons, out_path)
    for comparison in comparisons:
        click.echo(
            f"{comparison.dataset:<11} {constants.DETECTOR_LABELS[comparison.detector]:<5} "
            + f"AUC {comparison.report.auc:.3f}"
        )


def run(argv=None):
    """runs the command line and returns the exit code"""
    load_dotenv(find_dotenv(usecwd=True))
    try:
        result = cli.main(
            args=argv,
            prog_name="krpd",
            standalone_mode=False,
            auto_envvar_prefix=constants.ENV_PREFIX,
        )
    except click.ClickException as error:
        report_error(error.format_message())
        return exit_code_for(error)
    except click.exceptions.Abort:
        report_error("aborted")
        return constants.EXIT_USAGE_ERROR
    except DetectorError as error:
        report_error(error)
        return exit_code_for(error)
    if isinstance(result, int):
        return result
    return constants.EXIT_SUCCESS


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
