"""positive definite kernels, Gram matrices and their double centering

the centering statistics are taken from the training cloud only and
stored at fit time, queries are centered against them (out-of-sample
centering)"""
import numpy as np
from scipy.spatial.distance import cdist

import constants
from DetectorErrors import InvalidParameterError, DimensionMismatchError
from ParameterValidation import verify_positive_real, as_query_matrix


class KernelSpec:
    """kernel family and its parameter

    rbf: k(x, y) = exp(-gamma * ||x - y||^2)
    linear: k(x, y) = x^T y (gamma is ignored)

    :param _family: one of constants.KERNEL_FAMILIES
    :type _family: str
    :param _gamma: kernel width parameter, always > 0
    :type _gamma: float
    """

    def __init__(self, family=constants.RBF_KERNEL, gamma=constants.DEFAULT_GAMMA):
        if family not in constants.KERNEL_FAMILIES:
            raise InvalidParameterError(
                "kernel", family, f"one of {constants.KERNEL_FAMILIES}"
            )
        verify_positive_real("gamma", gamma)
        self._family = family
        self._gamma = float(gamma)

    @property
    def family(self):
        return self._family

    @property
    def gamma(self):
        return self._gamma

    def to_dict(self):
        return {"family": self._family, "gamma": self._gamma}

    def __eq__(self, other):
        if not isinstance(other, KernelSpec):
            return NotImplemented
        return self._family == other.family and self._gamma == other.gamma

    def __repr__(self):
        return f"KernelSpec(family={self._family!r}, gamma={self._gamma!r})"


def kernel_matrix(spec, first, second):
    """returns matrix of k(a, b) for rows a of first and b of second"""
    if spec.family == constants.LINEAR_KERNEL:
        return first @ second.T
    return np.exp(-spec.gamma * cdist(first, second, "sqeuclidean"))


def kernel_diagonal(spec, points):
    """returns k(x, x) for every row x of points"""
    if spec.family == constants.LINEAR_KERNEL:
        return np.einsum("ij,ij->i", points, points)
    return np.ones(points.shape[0])


def kernel_eval(spec, x, y):
    """returns k(x, y) for two d-vectors"""
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.shape != y.shape:
        raise DimensionMismatchError(x.shape[0], y.shape[0])
    if spec.family == constants.LINEAR_KERNEL:
        return float(x @ y)
    difference = x - y
    return float(np.exp(-spec.gamma * (difference @ difference)))


class GramModel:
    """Gram matrix of a training cloud with the statistics needed to
    center it and to center query kernel rows

    :param _spec: kernel used for every evaluation
    :type _spec: KernelSpec
    :param _cloud: training cloud the matrix was computed on
    :type _cloud: DataCloud.DataCloud
    :param _gram: N x N symmetric kernel matrix
    :type _gram: numpy array
    :param _row_means: mean of every row of gram
    :type _row_means: numpy array
    :param _grand_mean: mean of all entries of gram
    :type _grand_mean: float
    """

    def __init__(self, spec, cloud, gram, row_means, grand_mean):
        self._spec = spec
        self._cloud = cloud
        self._gram = gram
        self._row_means = row_means
        self._grand_mean = grand_mean
        for array in (self._gram, self._row_means):
            array.setflags(write=False)

    @property
    def spec(self):
        return self._spec

    @property
    def training_cloud(self):
        return self._cloud

    @property
    def gram(self):
        return self._gram

    @property
    def row_means(self):
        return self._row_means

    @property
    def grand_mean(self):
        return self._grand_mean

    @property
    def n_samples(self):
        return self._gram.shape[0]

    @property
    def n_dims(self):
        return self._cloud.n_dims

    def centered_gram(self):
        """returns K' = K - 1_N K - K 1_N + 1_N K 1_N"""
        return (
            self._gram
            - self._row_means[np.newaxis, :]
            - self._row_means[:, np.newaxis]
            + self._grand_mean
        )

    def cross_gram(self, queries):
        """returns uncentered M x N matrix of k(q_m, x_n)"""
        queries = as_query_matrix(queries, self.n_dims)
        return kernel_matrix(self._spec, queries, self._cloud.features)

    def cross_gram_centered(self, queries):
        """returns K'_q = K_q - 1' K - K_q 1_N + 1' K 1_N, rows for queries
        taken from the training cloud equal rows of centered_gram"""
        query_gram = self.cross_gram(queries)
        return (
            query_gram
            - self._row_means[np.newaxis, :]
            - query_gram.mean(axis=1)[:, np.newaxis]
            + self._grand_mean
        )

    def centered_self_kernel(self, queries):
        """returns k(q, q) - (2/N) sum_n k(q, x_n) + grand_mean per query,
        the squared norm of the centered feature-space image of q"""
        queries = as_query_matrix(queries, self.n_dims)
        query_gram = kernel_matrix(self._spec, queries, self._cloud.features)
        return (
            kernel_diagonal(self._spec, queries)
            - 2.0 * query_gram.mean(axis=1)
            + self._grand_mean
        )


def fit_gram(spec, cloud):
    """computes Gram matrix of cloud and its centering statistics"""
    gram = kernel_matrix(spec, cloud.features, cloud.features)
    row_means = gram.mean(axis=1)
    grand_mean = float(gram.mean())
    return GramModel(spec, cloud, gram, row_means, grand_mean)


def centered_gram(model):
    return model.centered_gram()


def cross_gram_centered(model, queries):
    return model.cross_gram_centered(queries)
