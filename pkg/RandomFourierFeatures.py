"""random Fourier features approximating the RBF kernel

z(x)_i = sqrt(2 / D) * cos(w_i^T x + b_i) with w_i ~ N(0, 2 gamma I) and
b_i ~ U[0, 2 pi), so z(x)^T z(y) is an unbiased estimate of
exp(-gamma ||x - y||^2). Depth computed on z(X) is the "KRPD without
kernel PCA" ablation: no centering, no component selection."""
import logging

import numpy as np

from DetectorErrors import ModelFileError
from ParameterValidation import verify_positive_real, verify_integer, as_query_matrix
from ProjectionDepth import sample_directions, fit_scorer, verify_cloud_size
from RandomGenerators import make_generator, spawn_seeds

logger = logging.getLogger(__name__)


class RffMap:
    """explicit random feature map

    :param _frequencies: D x d matrix of frequencies w_i
    :type _frequencies: numpy array
    :param _phases: D phases b_i in [0, 2 pi)
    :type _phases: numpy array
    :param _gamma: RBF kernel parameter being approximated
    :type _gamma: float
    :param _seed: seed the map was drawn with
    :type _seed: int
    """

    def __init__(self, frequencies, phases, gamma, seed):
        frequencies = np.array(frequencies, dtype=float)
        phases = np.array(phases, dtype=float)
        frequencies.setflags(write=False)
        phases.setflags(write=False)
        self._frequencies = frequencies
        self._phases = phases
        self._gamma = float(gamma)
        self._seed = seed

    @property
    def frequencies(self):
        return self._frequencies

    @property
    def phases(self):
        return self._phases

    @property
    def gamma(self):
        return self._gamma

    @property
    def seed(self):
        return self._seed

    @property
    def n_features(self):
        return self._frequencies.shape[0]

    @property
    def input_dim(self):
        return self._frequencies.shape[1]

    @property
    def output_dim(self):
        return self.n_features

    def transform(self, points):
        """returns Q x D feature matrix"""
        points = as_query_matrix(points, self.input_dim)
        scale = np.sqrt(2.0 / self.n_features)
        return scale * np.cos(points @ self._frequencies.T + self._phases)

    def to_dict(self):
        return {
            "gamma": self._gamma,
            "seed": int(self._seed),
            "frequencies": self._frequencies.tolist(),
            "phases": self._phases.tolist(),
        }


def fit_rff(gamma, dim, n_features, seed):
    """draws a random Fourier feature map for the RBF kernel with gamma"""
    verify_positive_real("gamma", gamma)
    verify_integer("dim", dim, 1)
    verify_integer("n_features", n_features, 1)
    generator = make_generator(seed)
    frequencies = generator.normal(0.0, np.sqrt(2.0 * gamma), (n_features, dim))
    phases = generator.uniform(0.0, 2.0 * np.pi, n_features)
    return RffMap(frequencies, phases, gamma, seed)


def rff_from_dict(model_data):
    try:
        return RffMap(
            model_data["frequencies"],
            model_data["phases"],
            model_data["gamma"],
            model_data["seed"],
        )
    except (KeyError, TypeError, ValueError) as error:
        raise ModelFileError("<rff>", f"missing or malformed field {error}") from error


def rff_transform(rff_map, points):
    return rff_map.transform(points)


def fit_krpd_rff(cloud, gamma, n_features, n_directions, seed):
    """maps cloud with a random Fourier feature map and fits random
    projection depth in the D-dimensional feature space; the map and the
    directions use independent streams split from seed"""
    verify_cloud_size(cloud)
    verify_integer("n_directions", n_directions, 1)
    map_seed, direction_seed = spawn_seeds(seed, 2)
    rff_map = fit_rff(gamma, cloud.n_dims, n_features, map_seed)
    direction_set = sample_directions(n_features, n_directions, direction_seed)
    scorer = fit_scorer(
        rff_map.transform(cloud.features),
        direction_set,
        embedding=rff_map,
        input_dim=cloud.n_dims,
    )
    logger.info(
        "KRPD-RFF fitted on N=%d with D=%d, L=%d",
        cloud.n_samples,
        n_features,
        n_directions,
    )
    return scorer
