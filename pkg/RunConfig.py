""" settings of one command line run, read from flags and an optional
yaml file whose keys mirror the flag names"""
import logging
from pathlib import Path

import yaml

import constants
from DetectorErrors import InvalidParameterError, DataFileError
from ParameterValidation import (
    verify_positive_real,
    verify_integer,
    verify_open_fraction,
)
from RandomGenerators import verify_seed

logger = logging.getLogger(__name__)

CONFIG_KEYS = (
    "detector",
    "gamma",
    "components",
    "directions",
    "features",
    "neighbors",
    "seed",
    "search_seed",
    "split_seed",
    "contamination",
    "trials",
    "budget",
    "detectors",
    "eigensolver",
)


def read_config_file(path):
    """returns dictionary of settings stored in yaml file, unknown keys
    raise InvalidParameterError"""
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as file:
            settings = yaml.safe_load(file) or {}
    except OSError as error:
        raise DataFileError(path, error.strerror or str(error)) from error
    except (yaml.YAMLError, UnicodeDecodeError) as error:
        raise InvalidParameterError("config", str(path), f"valid yaml ({error})") from None
    if not isinstance(settings, dict):
        raise InvalidParameterError("config", str(path), "a mapping of settings")
    unknown = sorted(set(settings) - set(CONFIG_KEYS))
    if unknown:
        raise InvalidParameterError("config key", unknown[0], f"one of {CONFIG_KEYS}")
    return settings


def merge_settings(file_settings, flag_settings):
    """flags that were given (not None) override values from the file"""
    merged = dict(file_settings or {})
    for key, value in flag_settings.items():
        if value is not None and value != ():
            merged[key] = value
    return merged


class RunConfig:
    """validated settings of a run, None means the detector's default

    :param _detector: detector kind used by fit-score and grid
    :type _detector: str
    :param _gamma: RBF kernel parameter
    :type _gamma: float
    :param _components: kernel PCA components M
    :type _components: int
    :param _directions: random directions L
    :type _directions: int
    :param _features: random Fourier features D
    :type _features: int
    :param _neighbors: k of the kNN baseline
    :type _neighbors: int
    :param _seed: seed of directions, feature maps and benchmark trials
    :type _seed: int
    :param _search_seed: seed pinning hyperparameter search streams
    :type _search_seed: int
    :param _split_seed: seed pinning train/test split streams
    :type _split_seed: int
    :param _contamination: outlier fraction used for thresholds
    :type _contamination: float
    :param _trials: independent benchmark trials
    :type _trials: int
    :param _budget: search trials per detector
    :type _budget: int
    :param _detectors: detectors run by the benchmark
    :type _detectors: tuple
    :param _eigensolver: eigensolver of kernel PCA
    :type _eigensolver: str
    """

    def __init__(
        self,
        detector=constants.KRPD,
        gamma=None,
        components=None,
        directions=None,
        features=None,
        neighbors=None,
        seed=None,
        search_seed=None,
        split_seed=None,
        contamination=None,
        trials=None,
        budget=None,
        detectors=None,
        eigensolver=None,
    ):
        if detector not in constants.DETECTOR_KINDS:
            raise InvalidParameterError("detector", detector, f"one of {constants.DETECTOR_KINDS}")
        self._detector = detector
        self._gamma = self._checked(gamma, verify_positive_real, "gamma", float)
        self._components = self._checked_integer(components, "components")
        self._directions = self._checked_integer(directions, "directions")
        self._features = self._checked_integer(features, "features")
        self._neighbors = self._checked_integer(neighbors, "neighbors")
        self._seed = constants.DEFAULT_SEED if seed is None else seed
        verify_seed(self._seed)
        for value in (search_seed, split_seed):
            if value is not None:
                verify_seed(value)
        self._search_seed = search_seed
        self._split_seed = split_seed
        if contamination is None:
            contamination = constants.DEFAULT_CONTAMINATION
        verify_open_fraction("contamination", contamination)
        self._contamination = float(contamination)
        self._trials = self._checked_integer(trials, "trials")
        self._budget = self._checked_integer(budget, "budget")
        if isinstance(detectors, str):
            detectors = [part.strip() for part in detectors.split(",") if part.strip()]
        self._detectors = tuple(detectors or constants.BENCHMARK_DETECTORS)
        for kind in self._detectors:
            if kind not in constants.DETECTOR_KINDS:
                raise InvalidParameterError("detectors", kind, f"one of {constants.DETECTOR_KINDS}")
        eigensolver = eigensolver or constants.DEFAULT_EIGENSOLVER
        if eigensolver not in constants.EIGENSOLVERS:
            raise InvalidParameterError("eigensolver", eigensolver, f"one of {constants.EIGENSOLVERS}")
        self._eigensolver = eigensolver

    @staticmethod
    def _checked(value, verify, name, convert):
        if value is None:
            return None
        verify(name, value)
        return convert(value)

    @staticmethod
    def _checked_integer(value, name):
        if value is None:
            return None
        verify_integer(name, value, 1)
        return int(value)

    @classmethod
    def from_sources(cls, config_path=None, **flags):
        """builds config from an optional yaml file and command line flags"""
        file_settings = read_config_file(config_path) if config_path else {}
        if file_settings:
            logger.debug("settings from %s: %s", config_path, file_settings)
        return cls(**merge_settings(file_settings, flags))

    @property
    def detector(self):
        return self._detector

    @property
    def gamma(self):
        return self._gamma

    @property
    def components(self):
        return self._components

    @property
    def directions(self):
        return self._directions

    @property
    def features(self):
        return self._features

    @property
    def neighbors(self):
        return self._neighbors

    @property
    def seed(self):
        return self._seed

    @property
    def search_seed(self):
        return self._search_seed

    @property
    def split_seed(self):
        return self._split_seed

    @property
    def contamination(self):
        return self._contamination

    @property
    def trials(self):
        return self._trials

    @property
    def budget(self):
        return self._budget

    @property
    def detectors(self):
        return self._detectors

    @property
    def eigensolver(self):
        return self._eigensolver

    def hyperparameters(self, kind=None):
        """keyword arguments of the detector class of kind, settings left
        as None fall back to the class defaults"""
        kind = kind or self._detector
        options = {}
        if kind in (constants.KRPD, constants.KRPD_RFF, constants.KPCA):
            options["gamma"] = self._gamma
        if kind in (constants.KRPD, constants.KPCA):
            options["n_components"] = self._components
            options["eigensolver"] = self._eigensolver
        if kind == constants.KRPD_RFF:
            options["n_features"] = self._features
        if kind in constants.DEPTH_DETECTORS:
            options["n_directions"] = self._directions
        if kind == constants.KNN:
            options["k"] = self._neighbors
        return {key: value for key, value in options.items() if value is not None}
