""" benchmark protocol: repeated stratified 60/40 splits, random search on
the training part, refit with the winner and ROC AUC on the test part;
summary and ablation tables, toy comparison with fixed settings"""
import logging
import time
from pathlib import Path

import numpy as np

import constants
from DataAccess import (
    load_labelled_csv,
    describe_against_registry,
    write_rows,
    write_yaml,
)
from DataSplits import stratified_split
from Detectors import make_detector
from DetectorErrors import (
    DetectorError,
    InvalidParameterError,
    MissingLabelsError,
)
from Evaluation import evaluate_scores, aggregate_reports, format_mean_std
from HyperparameterSearch import SearchSpace, random_search
from ParameterValidation import verify_integer
from RandomGenerators import spawn_seeds
from ToyDatasets import generate_toy

logger = logging.getLogger(__name__)


def verify_detector_kinds(detector_kinds):
    """returns detector kinds as tuple, defaults to every detector"""
    detector_kinds = tuple(detector_kinds or constants.BENCHMARK_DETECTORS)
    for kind in detector_kinds:
        if kind not in constants.DETECTOR_KINDS:
            raise InvalidParameterError(
                "detector", kind, f"one of {constants.DETECTOR_KINDS}"
            )
    return detector_kinds


class BenchmarkCell:
    """result of one detector on one dataset over all trials

    :param _dataset: dataset name
    :type _dataset: str
    :param _detector: detector kind
    :type _detector: str
    :param _trials: per-trial records (seeds, hyperparameters, cv_auc, auc)
    :type _trials: list
    :param _reports: EvalReport of every successful trial
    :type _reports: list
    :param _failures: messages of failed trials
    :type _failures: list
    :param _seconds: wall time spent on the cell
    :type _seconds: float
    """

    def __init__(self, dataset, detector):
        self._dataset = dataset
        self._detector = detector
        self._trials = []
        self._reports = []
        self._failures = []
        self._seconds = 0.0

    @property
    def dataset(self):
        return self._dataset

    @property
    def detector(self):
        return self._detector

    @property
    def label(self):
        return constants.DETECTOR_LABELS[self._detector]

    @property
    def trials(self):
        return list(self._trials)

    @property
    def failures(self):
        return list(self._failures)

    @property
    def seconds(self):
        return self._seconds

    @property
    def succeeded(self):
        return bool(self._reports)

    @property
    def report(self):
        """EvalReport aggregated over successful trials, None if all failed"""
        if not self._reports:
            return None
        return aggregate_reports(self._reports)

    @property
    def hyperparameters(self):
        """hyperparameters of the trial with the highest CV AUC"""
        if not self._trials:
            return {}
        best = max(self._trials, key=lambda trial: trial["cv_auc"])
        return dict(best["hyperparameters"])

    def add_trial(self, seeds, hyperparameters, cv_auc, report):
        split_seed, search_seed, detector_seed = seeds
        self._trials.append(
            {
                "split_seed": int(split_seed),
                "search_seed": int(search_seed),
                "detector_seed": int(detector_seed),
                "hyperparameters": dict(hyperparameters),
                "cv_auc": float(cv_auc),
                "auc": report.auc,
            }
        )
        self._reports.append(report)

    def add_failure(self, message):
        self._failures.append(message)

    def add_time(self, seconds):
        self._seconds += seconds

    def to_dict(self):
        report = self.report
        return {
            "dataset": self._dataset,
            "detector": self.label,
            "auc_mean": None if report is None else report.auc_mean,
            "auc_std": None if report is None else report.auc_std,
            "hyperparameters": self.hyperparameters,
            "trials": self.trials,
            "failures": self.failures,
            "seconds": float(self._seconds),
        }


def run_trial(
    train, test, detector_kind, search_seed, detector_seed, budget, n_directions
):
    """searches hyperparameters on train, refits on all of train and
    evaluates on test; returns (hyperparameters, cv_auc, EvalReport)"""
    space = SearchSpace(budget=budget, seed=search_seed)
    search = random_search(train, space, detector_kind, n_directions=n_directions)
    detector = make_detector(detector_kind, search.hyperparameters, detector_seed)
    detector.fit(train)
    scores = detector.score(test.features)
    report = evaluate_scores(scores, test.labels, train.outlier_fraction)
    return search.hyperparameters, search.cv_auc, report


def benchmark_cloud(name, cloud, detector_kinds, trial_seeds, budget, n_directions):
    """returns BenchmarkCell of every detector on one labelled cloud,
    all detectors see the same split in a given trial"""
    cells = [BenchmarkCell(name, kind) for kind in detector_kinds]
    if not cloud.has_labels:
        for cell in cells:
            cell.add_failure(str(MissingLabelsError()))
        return cells
    for trial, (split_seed, search_seed, detector_seed) in enumerate(trial_seeds):
        try:
            plan = stratified_split(cloud, constants.TRAIN_FRACTION, split_seed)
            train, test = plan.apply(cloud)
        except DetectorError as error:
            for cell in cells:
                cell.add_failure(f"trial {trial}: {error}")
            continue
        for cell in cells:
            start = time.perf_counter()
            try:
                hyperparameters, cv_auc, report = run_trial(
                    train,
                    test,
                    cell.detector,
                    search_seed,
                    detector_seed,
                    budget,
                    n_directions,
                )
            except DetectorError as error:
                logger.warning("%s on %s, trial %d failed: %s", cell.label, name, trial, error)
                cell.add_failure(f"trial {trial}: {error}")
            else:
                cell.add_trial(trial_seeds[trial], hyperparameters, cv_auc, report)
                logger.debug("%s on %s, trial %d: AUC %.4f", cell.label, name, trial, report.auc)
            cell.add_time(time.perf_counter() - start)
    for cell in cells:
        if cell.succeeded:
            report = cell.report
            logger.info(
                "%s on %s: AUC %s",
                cell.label,
                name,
                format_mean_std(report.auc_mean, report.auc_std),
            )
    return cells


def make_trial_seeds(trials, seed, split_seed=None, search_seed=None):
    """returns (split, search, detector) seed triple of every trial; split
    and search streams may be pinned independently of seed"""
    verify_integer("trials", trials, 1)
    split_root, search_root, detector_root = spawn_seeds(seed, 3)
    if split_seed is not None:
        split_root = split_seed
    if search_seed is not None:
        search_root = search_seed
    return list(
        zip(
            spawn_seeds(split_root, trials),
            spawn_seeds(search_root, trials),
            spawn_seeds(detector_root, trials),
        )
    )


def run_benchmark_on_clouds(
    named_clouds,
    detector_kinds=None,
    trials=None,
    seed=constants.DEFAULT_SEED,
    budget=None,
    n_directions=None,
    split_seed=None,
    search_seed=None,
):
    """runs the protocol on (name, DataCloud) pairs and returns the list
    of BenchmarkCells, datasets outer and detectors inner"""
    detector_kinds = verify_detector_kinds(detector_kinds)
    trials = constants.DEFAULT_TRIALS if trials is None else trials
    trial_seeds = make_trial_seeds(trials, seed, split_seed, search_seed)
    cells = []
    for name, cloud in named_clouds:
        cells.extend(
            benchmark_cloud(
                name, cloud, detector_kinds, trial_seeds, budget, n_directions
            )
        )
    return cells


def run_benchmark(
    dataset_paths,
    detector_kinds=None,
    trials=None,
    seed=constants.DEFAULT_SEED,
    budget=None,
    n_directions=None,
    split_seed=None,
    search_seed=None,
):
    """loads every labelled csv and runs the protocol on it; a dataset
    that fails to load is recorded as failed in each of its cells,
    those cells come after the cells of loaded datasets"""
    detector_kinds = verify_detector_kinds(detector_kinds)
    named_clouds = []
    failed = []
    for path in dataset_paths:
        name = Path(path).stem
        try:
            cloud = load_labelled_csv(path)
        except DetectorError as error:
            logger.warning("cannot load %s: %s", path, error)
            failed.append((name, str(error)))
            continue
        describe_against_registry(name, cloud)
        named_clouds.append((name, cloud))

    cells = run_benchmark_on_clouds(
        named_clouds,
        detector_kinds,
        trials,
        seed,
        budget,
        n_directions,
        split_seed,
        search_seed,
    )
    for name, message in failed:
        for kind in detector_kinds:
            cell = BenchmarkCell(name, kind)
            cell.add_failure(message)
            cells.append(cell)
    return cells


def pivot(cells, columns):
    """returns (datasets, {(dataset, column): cell}) keeping first-seen order"""
    datasets = []
    table = {}
    for cell in cells:
        if cell.detector not in columns:
            continue
        if cell.dataset not in datasets:
            datasets.append(cell.dataset)
        table[(cell.dataset, columns[cell.detector])] = cell
    return datasets, table


def render_table(header, rows):
    widths = [max(len(str(row[column])) for row in [header] + rows) for column in range(len(header))]
    lines = []
    for row in [header] + rows:
        cells = [str(value).ljust(width) for value, width in zip(row, widths)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def format_pivot(cells, columns, titles):
    datasets, table = pivot(cells, columns)
    rows = []
    averages = {title: [] for title in titles}
    for dataset in datasets:
        row = [dataset]
        for title in titles:
            cell = table.get((dataset, title))
            if cell is None:
                row.append("-")
            elif not cell.succeeded:
                row.append("failed")
            else:
                report = cell.report
                averages[title].append((report.auc_mean, report.auc_std))
                row.append(format_mean_std(report.auc_mean, report.auc_std))
        rows.append(row)
    average_row = ["Average"]
    for title in titles:
        if averages[title]:
            means, stds = zip(*averages[title])
            average_row.append(format_mean_std(np.mean(means), np.mean(stds)))
        else:
            average_row.append("-")
    rows.append(average_row)
    return render_table(["dataset"] + list(titles), rows)


def format_summary_table(cells):
    """dataset x detector table of mean ± std AUC with an Average row,
    the average is the mean of per-dataset means and of per-dataset stds"""
    kinds = []
    for cell in cells:
        if cell.detector not in kinds:
            kinds.append(cell.detector)
    columns = {kind: constants.DETECTOR_LABELS[kind] for kind in kinds}
    return format_pivot(cells, columns, list(columns.values()))


def format_ablation_table(cells):
    """KRPD with random Fourier features against KRPD with kernel PCA"""
    columns = {
        constants.KRPD_RFF: constants.ABLATION_WITHOUT_KPCA,
        constants.KRPD: constants.ABLATION_WITH_KPCA,
    }
    return format_pivot(
        cells, columns, [constants.ABLATION_WITHOUT_KPCA, constants.ABLATION_WITH_KPCA]
    )


def has_ablation(cells):
    kinds = {cell.detector for cell in cells}
    return constants.KRPD_RFF in kinds and constants.KRPD in kinds


def table_row(cell, timing=True):
    """row of the benchmark csv; M holds components, random features or k"""
    report = cell.report
    hyperparameters = cell.hyperparameters
    m_value = ""
    for key in ("n_components", "n_features", "k"):
        if key in hyperparameters:
            m_value = hyperparameters[key]
    return [
        cell.dataset,
        cell.label,
        "" if report is None else report.auc_mean,
        "" if report is None else report.auc_std,
        hyperparameters.get("gamma", ""),
        m_value,
        hyperparameters.get("n_directions", ""),
        f"{cell.seconds:.3f}" if timing else "",
    ]


def write_benchmark_table(cells, path, timing=True):
    """writes csv dataset,detector,auc_mean,auc_std,gamma,M,L,seconds;
    without timing the seconds column stays empty so reruns are identical"""
    rows = [table_row(cell, timing) for cell in cells]
    write_rows(path, list(constants.BENCHMARK_TABLE_COLUMNS), rows)


def write_benchmark_records(cells, path, timing=True):
    """writes one yaml record per dataset x detector"""
    records = []
    for cell in cells:
        record = cell.to_dict()
        if not timing:
            del record["seconds"]
        records.append(record)
    write_yaml(records, path)


class ToyComparison:
    """outcome of one detector on one toy cloud with fixed settings

    :param _dataset: toy kind
    :type _dataset: str
    :param _detector: detector kind
    :type _detector: str
    :param _report: single-trial EvalReport on the whole cloud
    :type _report: EvalReport
    """

    def __init__(self, dataset, detector, report):
        self._dataset = dataset
        self._detector = detector
        self._report = report

    @property
    def dataset(self):
        return self._dataset

    @property
    def detector(self):
        return self._detector

    @property
    def report(self):
        return self._report

    def to_row(self):
        tp, fp, tn, fn = self._report.confusion
        return [
            self._dataset,
            constants.DETECTOR_LABELS[self._detector],
            self._report.auc,
            self._report.threshold,
            tp,
            fp,
            tn,
            fn,
        ]


def toy_detector(kind, seed):
    """detector with the fixed settings of the toy figures"""
    if kind == constants.KRPD:
        hyperparameters = {
            "gamma": constants.DEFAULT_GAMMA,
            "n_components": constants.DEFAULT_COMPONENTS,
        }
    elif kind == constants.KPCA:
        hyperparameters = {
            "gamma": constants.DEFAULT_GAMMA,
            "n_components": constants.DEFAULT_KPCA_COMPONENTS,
        }
    elif kind == constants.KRPD_RFF:
        hyperparameters = {
            "gamma": constants.DEFAULT_GAMMA,
            "n_features": constants.DEFAULT_RFF_FEATURES,
        }
    elif kind == constants.KNN:
        hyperparameters = {"k": constants.DEFAULT_NEIGHBORS}
    else:
        hyperparameters = {}
    if kind in constants.DEPTH_DETECTORS:
        hyperparameters["n_directions"] = constants.DEFAULT_DIRECTIONS
    return make_detector(kind, hyperparameters, seed)


def compare_on_toys(toy_kinds=None, detector_kinds=None, seed=constants.DEFAULT_SEED):
    """fits every detector on each whole toy cloud, thresholds its scores
    at the default contamination and returns ToyComparisons"""
    toy_kinds = tuple(toy_kinds or constants.TOY_KINDS)
    detector_kinds = tuple(detector_kinds or (constants.RPD, constants.KRPD, constants.KPCA))
    data_seed, detector_seed = spawn_seeds(seed, 2)
    comparisons = []
    for toy_kind in toy_kinds:
        cloud = generate_toy(toy_kind, data_seed)
        for kind in detector_kinds:
            detector = toy_detector(kind, detector_seed).fit(cloud)
            scores = detector.score(cloud.features)
            report = evaluate_scores(scores, cloud.labels, constants.DEFAULT_CONTAMINATION)
            logger.info("%s on %s: AUC %.3f", detector.name, toy_kind, report.auc)
            comparisons.append(ToyComparison(toy_kind, kind, report))
    return comparisons


TOY_COMPARISON_COLUMNS = ["dataset", "detector", "auc", "threshold", "tp", "fp", "tn", "fn"]


def write_toy_comparison(comparisons, path):
    write_rows(path, TOY_COMPARISON_COLUMNS, [comparison.to_row() for comparison in comparisons])
