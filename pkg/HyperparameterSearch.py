""" seeded random hyperparameter search scored by stratified k-fold
cross-validated ROC AUC on labelled training data"""
import logging
import math

import numpy as np

import constants
from DataSplits import stratified_kfold
from Detectors import make_detector
from DetectorErrors import (
    DetectorError,
    InvalidParameterError,
    SearchFailedError,
)
from Evaluation import roc_auc
from ParameterValidation import verify_integer, verify_positive_real
from RandomGenerators import make_generator, spawn_seeds, verify_seed

logger = logging.getLogger(__name__)


class SearchSpace:
    """ranges hyperparameters are sampled from

    :param _gamma_range: (low, high) of log-uniform kernel parameter
    :type _gamma_range: tuple
    :param _m_range: (low, high) inclusive integer range of components
        (random features for KRPD-RFF)
    :type _m_range: tuple
    :param _budget: number of sampled configurations
    :type _budget: int
    :param _seed: seed of sampling, folds and detector randomness
    :type _seed: int
    :param _neighbor_choices: values of k tried for kNN
    :type _neighbor_choices: tuple
    """

    def __init__(
        self,
        gamma_range=None,
        m_range=None,
        budget=None,
        seed=constants.DEFAULT_SEED,
        neighbor_choices=None,
    ):
        gamma_range = tuple(gamma_range or constants.GAMMA_RANGE)
        m_range = tuple(m_range or constants.COMPONENTS_RANGE)
        neighbor_choices = tuple(neighbor_choices or constants.NEIGHBOR_CHOICES)
        budget = constants.DEFAULT_SEARCH_BUDGET if budget is None else budget
        for value in gamma_range:
            verify_positive_real("gamma_range", value)
        if len(gamma_range) != 2 or gamma_range[0] > gamma_range[1]:
            raise InvalidParameterError("gamma_range", gamma_range, "low <= high")
        for value in m_range:
            verify_integer("m_range", value, 1)
        if len(m_range) != 2 or m_range[0] > m_range[1]:
            raise InvalidParameterError("m_range", m_range, "low <= high")
        if not neighbor_choices:
            raise InvalidParameterError("neighbor_choices", neighbor_choices, "a non-empty set")
        for value in neighbor_choices:
            verify_integer("neighbor_choices", value, 1)
        verify_integer("budget", budget, 1)
        verify_seed(seed)
        self._gamma_range = gamma_range
        self._m_range = m_range
        self._budget = budget
        self._seed = seed
        self._neighbor_choices = neighbor_choices

    @property
    def gamma_range(self):
        return self._gamma_range

    @property
    def m_range(self):
        return self._m_range

    @property
    def budget(self):
        return self._budget

    @property
    def seed(self):
        return self._seed

    @property
    def neighbor_choices(self):
        return self._neighbor_choices

    def sample_gamma(self, generator):
        low, high = self._gamma_range
        return float(math.exp(generator.uniform(math.log(low), math.log(high))))

    def sample_m(self, generator, cap=None):
        low, high = self._m_range
        value = int(generator.integers(low, high + 1))
        if cap is not None:
            value = min(value, cap)
        return value

    def sample(self, generator, detector_kind, fold_train_size):
        """returns hyperparameters of one trial; components are capped at
        fold_train_size - 1 and k at fold_train_size"""
        if detector_kind in (constants.KRPD, constants.KPCA):
            gamma = self.sample_gamma(generator)
            n_components = self.sample_m(generator, max(fold_train_size - 1, 1))
            return {"gamma": gamma, "n_components": n_components}
        if detector_kind == constants.KRPD_RFF:
            gamma = self.sample_gamma(generator)
            return {"gamma": gamma, "n_features": self.sample_m(generator)}
        if detector_kind == constants.KNN:
            choices = [k for k in self._neighbor_choices if k <= fold_train_size]
            if not choices:
                choices = [fold_train_size]
            return {"k": int(choices[generator.integers(len(choices))])}
        if detector_kind == constants.RPD:
            return {}
        raise InvalidParameterError("detector", detector_kind, f"one of {constants.DETECTOR_KINDS}")


class SearchTrial:
    """one sampled configuration and its validation AUCs

    :param _hyperparameters: sampled hyperparameters
    :type _hyperparameters: dict
    :param _fold_aucs: validation AUC of every fold, empty if trial failed
    :type _fold_aucs: list
    :param _error: message of the error that failed the trial
    :type _error: str
    """

    def __init__(self, hyperparameters, fold_aucs, error=None):
        self._hyperparameters = dict(hyperparameters)
        self._fold_aucs = list(fold_aucs)
        self._error = error

    @property
    def hyperparameters(self):
        return dict(self._hyperparameters)

    @property
    def fold_aucs(self):
        return list(self._fold_aucs)

    @property
    def error(self):
        return self._error

    @property
    def failed(self):
        return self._error is not None

    @property
    def cv_auc(self):
        """mean validation AUC, -inf for a failed trial"""
        if self.failed:
            return -math.inf
        return float(np.mean(self._fold_aucs))


class SearchResult:
    """winner of a random search with every evaluated trial

    :param _best: trial with highest mean validation AUC
    :type _best: SearchTrial
    :param _trials: all trials in sampling order
    :type _trials: list
    """

    def __init__(self, best, trials):
        self._best = best
        self._trials = list(trials)

    @property
    def hyperparameters(self):
        return self._best.hyperparameters

    @property
    def cv_auc(self):
        return self._best.cv_auc

    @property
    def trials(self):
        return list(self._trials)

    @property
    def n_failed(self):
        return sum(1 for trial in self._trials if trial.failed)


def evaluate_trial(train, plans, detector_kind, hyperparameters, detector_seed):
    """fits detector on every fold and returns a SearchTrial, errors
    raised by fitting or scoring fail the trial"""
    fold_aucs = []
    try:
        for plan in plans:
            fold_train, fold_validation = plan.apply(train)
            detector = make_detector(detector_kind, hyperparameters, detector_seed)
            detector.fit(fold_train)
            scores = detector.score(fold_validation.features)
            fold_aucs.append(roc_auc(scores, fold_validation.labels))
    except DetectorError as error:
        logger.warning("search trial %s failed: %s", hyperparameters, error)
        return SearchTrial(hyperparameters, [], str(error))
    trial = SearchTrial(hyperparameters, fold_aucs)
    logger.debug("trial %s: folds %s, mean %.4f", hyperparameters, fold_aucs, trial.cv_auc)
    return trial


def random_search(
    train,
    space,
    detector_kind,
    n_directions=None,
    n_folds=None,
    extra_hyperparameters=None,
):
    """samples space.budget configurations, scores each by mean AUC over
    stratified folds and returns SearchResult with the best one

    folds and detector seeds are shared by all trials so configurations
    are compared on equal footing; ties keep the earliest trial"""
    n_directions = constants.DEFAULT_DIRECTIONS if n_directions is None else n_directions
    n_folds = constants.CV_FOLDS if n_folds is None else n_folds
    verify_integer("n_directions", n_directions, 1)
    sample_seed, fold_seed, detector_seed = spawn_seeds(space.seed, 3)
    plans = stratified_kfold(train, n_folds, fold_seed)
    fold_train_size = min(len(plan.train_indices) for plan in plans)

    budget = 1 if detector_kind == constants.RPD else space.budget
    generator = make_generator(sample_seed)
    trials = []
    for _ in range(budget):
        hyperparameters = space.sample(generator, detector_kind, fold_train_size)
        if detector_kind in constants.DEPTH_DETECTORS:
            hyperparameters["n_directions"] = n_directions
        hyperparameters.update(extra_hyperparameters or {})
        trials.append(
            evaluate_trial(train, plans, detector_kind, hyperparameters, detector_seed)
        )

    best = max(trials, key=lambda trial: trial.cv_auc)
    if best.failed:
        raise SearchFailedError(constants.DETECTOR_LABELS[detector_kind], len(trials))
    logger.info(
        "%s search: best %s with CV AUC %.4f (%d of %d trials failed)",
        constants.DETECTOR_LABELS[detector_kind],
        best.hyperparameters,
        best.cv_auc,
        sum(1 for trial in trials if trial.failed),
        len(trials),
    )
    return SearchResult(best, trials)
