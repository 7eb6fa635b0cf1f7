"""random projection outlyingness and depth

the outlyingness of x is the largest robust standardized deviation
|u^T x - MED(u^T X)| / MAD(u^T X) over L random unit directions u,
depth is 1 / (1 + outlyingness) and the outlier score is -depth.
MED and MAD are computed once on the training cloud. For KRPD the cloud
and every query are first mapped by an embedding (kernel PCA
coordinates, or random Fourier features for the ablation)."""
import logging

import numpy as np

import constants
from DetectorErrors import DegenerateProjectionError, ModelFileError
from Kernels import fit_gram
from KernelPCA import fit_kpca
from ParameterValidation import verify_integer, as_query_matrix
from RandomGenerators import make_generator
from RobustStatistics import column_medians_and_mads

logger = logging.getLogger(__name__)


class DirectionSet:
    """L unit vectors in m dimensions

    :param _directions: L x m matrix, every row has unit norm
    :type _directions: numpy array
    :param _seed: seed the directions were drawn with
    :type _seed: int
    """

    def __init__(self, directions, seed):
        directions = np.array(directions, dtype=float)
        directions.setflags(write=False)
        self._directions = directions
        self._seed = seed

    @property
    def directions(self):
        return self._directions

    @property
    def seed(self):
        return self._seed

    @property
    def count(self):
        return self._directions.shape[0]

    @property
    def dim(self):
        return self._directions.shape[1]

    def head(self, count):
        """returns DirectionSet of the first count directions"""
        return DirectionSet(self._directions[:count], self._seed)


def sample_directions(dim, count, seed):
    """draws count directions uniformly on the unit sphere S^(dim-1) by
    normalizing standard normal vectors; rows are drawn in order, so the
    first L' rows of a draw with L >= L' equal the draw with L'"""
    verify_integer("dim", dim, 1)
    verify_integer("count", count, 1)
    generator = make_generator(seed)
    gaussian = generator.standard_normal((count, dim))
    norms = np.linalg.norm(gaussian, axis=1)
    # a zero vector has probability zero, redraw it anyway
    for row in np.flatnonzero(norms == 0.0):
        while norms[row] == 0.0:
            gaussian[row] = generator.standard_normal(dim)
            norms[row] = np.linalg.norm(gaussian[row])
    return DirectionSet(gaussian / norms[:, np.newaxis], seed)


def mad_floors(projections):
    """per-direction threshold below which a MAD counts as zero"""
    typical = np.median(np.abs(projections), axis=0)
    return constants.MAD_RELATIVE_FLOOR * np.maximum(1.0, typical)


class DepthScorer:
    """per-direction MED/MAD of a projected training cloud

    :param _direction_set: directions the cloud was projected on
    :type _direction_set: DirectionSet
    :param _medians: L medians of u_l^T X
    :type _medians: numpy array
    :param _mads: L median absolute deviations of u_l^T X
    :type _mads: numpy array
    :param _excluded: True for directions whose MAD is (numerically) zero
    :type _excluded: numpy array
    :param _embedding: KernelPCA.KpcaModel or RandomFourierFeatures.RffMap
        applied to queries before projecting, None for plain RPD
    :type _embedding: object
    :param _input_dim: dimension of queries accepted by the scorer
    :type _input_dim: int
    """

    def __init__(self, direction_set, medians, mads, excluded, embedding, input_dim):
        self._direction_set = direction_set
        self._medians = medians
        self._mads = mads
        self._excluded = excluded
        self._embedding = embedding
        self._input_dim = input_dim

        active = ~excluded
        self._active_directions = direction_set.directions[active]
        self._active_medians = medians[active]
        self._active_mads = mads[active]

    @property
    def direction_set(self):
        return self._direction_set

    @property
    def medians(self):
        return self._medians

    @property
    def mads(self):
        return self._mads

    @property
    def excluded(self):
        return self._excluded

    @property
    def n_active_directions(self):
        return self._active_directions.shape[0]

    @property
    def embedding(self):
        return self._embedding

    @property
    def space_dim(self):
        """dimension of the space the directions live in"""
        return self._direction_set.dim

    @property
    def input_dim(self):
        return self._input_dim

    def embed(self, queries):
        if self._embedding is None:
            return queries
        return self._embedding.transform(queries)

    def outlyingness(self, queries):
        """returns max over active directions of |u^T b - MED| / MAD for
        every query b (queries are embedded first when an embedding is set)"""
        queries = as_query_matrix(queries, self._input_dim)
        result = np.empty(queries.shape[0])
        batch_size = constants.SCORING_BATCH_SIZE
        for start in range(0, queries.shape[0], batch_size):
            batch = self.embed(queries[start : start + batch_size])
            projections = batch @ self._active_directions.T
            deviations = np.abs(projections - self._active_medians) / self._active_mads
            result[start : start + batch_size] = np.max(deviations, axis=1)
        return result

    def depth(self, queries):
        """returns 1 / (1 + outlyingness), values in (0, 1]"""
        return 1.0 / (1.0 + self.outlyingness(queries))

    def outlier_score(self, queries):
        """returns negative depth, higher means more outlying"""
        return -self.depth(queries)

    def to_dict(self):
        """plain dictionary of directions and statistics, the embedding is
        stored by the caller"""
        return {
            "seed": int(self._direction_set.seed),
            "directions": self._direction_set.directions.tolist(),
            "medians": self._medians.tolist(),
            "mads": self._mads.tolist(),
            "excluded": self._excluded.tolist(),
            "input_dim": int(self._input_dim),
        }


def fit_scorer(points, direction_set, embedding=None, input_dim=None):
    """computes per-direction MED/MAD of points (already embedded) and
    returns DepthScorer, raises DegenerateProjectionError when every
    direction has zero MAD"""
    projections = points @ direction_set.directions.T
    medians, mads = column_medians_and_mads(projections)
    excluded = mads < mad_floors(projections)
    if np.all(excluded):
        raise DegenerateProjectionError(direction_set.count)
    if np.any(excluded):
        logger.warning(
            "%d of %d directions excluded for zero MAD",
            int(np.sum(excluded)),
            direction_set.count,
        )
    for array in (medians, mads, excluded):
        array.setflags(write=False)
    if input_dim is None:
        input_dim = points.shape[1]
    return DepthScorer(direction_set, medians, mads, excluded, embedding, input_dim)


def scorer_from_dict(model_data, embedding=None):
    """rebuilds DepthScorer from DepthScorer.to_dict output"""
    try:
        direction_set = DirectionSet(model_data["directions"], model_data["seed"])
        medians = np.array(model_data["medians"], dtype=float)
        mads = np.array(model_data["mads"], dtype=float)
        excluded = np.array(model_data["excluded"], dtype=bool)
        input_dim = int(model_data["input_dim"])
    except (KeyError, TypeError, ValueError) as error:
        raise ModelFileError("<depth>", f"missing or malformed field {error}") from error
    if not medians.shape == mads.shape == excluded.shape == (direction_set.count,):
        raise ModelFileError("<depth>", "statistics do not match directions")
    return DepthScorer(direction_set, medians, mads, excluded, embedding, input_dim)


def verify_cloud_size(cloud):
    verify_integer("number of samples", cloud.n_samples, 2)


def fit_rpd(cloud, n_directions, seed):
    """random projection depth in the input space of cloud"""
    verify_cloud_size(cloud)
    direction_set = sample_directions(cloud.n_dims, n_directions, seed)
    scorer = fit_scorer(cloud.features, direction_set)
    logger.info(
        "RPD fitted on N=%d, d=%d, L=%d", cloud.n_samples, cloud.n_dims, n_directions
    )
    return scorer


def fit_krpd(
    cloud,
    spec,
    n_components,
    n_directions,
    seed,
    eigensolver=constants.DEFAULT_EIGENSOLVER,
):
    """kernel random projection depth: Gram matrix, kernel PCA, then
    random directions in the effective M-dimensional coordinate space"""
    verify_cloud_size(cloud)
    verify_integer("n_directions", n_directions, 1)
    kpca_model = fit_kpca(fit_gram(spec, cloud), n_components, eigensolver)
    direction_set = sample_directions(kpca_model.n_components, n_directions, seed)
    return fit_scorer(
        kpca_model.train_embedding,
        direction_set,
        embedding=kpca_model,
        input_dim=cloud.n_dims,
    )


def outlyingness(scorer, queries):
    return scorer.outlyingness(queries)


def depth(scorer, queries):
    return scorer.depth(queries)


def outlier_score(scorer, queries):
    return scorer.outlier_score(queries)
