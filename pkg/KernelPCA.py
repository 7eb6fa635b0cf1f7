"""kernel principal component analysis on a fitted GramModel

coefficient column j is the eigenvector of the centered Gram matrix
divided by sqrt(lambda_j), so lambda_j * a_j^T a_j = 1 and the
coordinates of a point are beta = coefficients^T k'(x)"""
import logging

import numpy as np

import constants
from DataCloud import DataCloud
from DetectorErrors import (
    DegenerateEmbeddingError,
    ModelFileError,
)
from Eigensolvers import symmetric_eigh
from Kernels import KernelSpec, GramModel, kernel_matrix
from ParameterValidation import verify_integer, as_query_matrix

logger = logging.getLogger(__name__)


def rank_threshold(largest_eigenvalue, n_samples):
    """eigenvalues at or below this value are not usable components"""
    return (
        max(
            constants.RANK_ABSOLUTE_FLOOR,
            constants.RANK_RELATIVE_FLOOR * largest_eigenvalue,
        )
        * n_samples
    )


def fix_column_signs(vectors):
    """flips columns so the largest-magnitude entry of each is positive"""
    if vectors.shape[1] == 0:
        return vectors
    rows = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[rows, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


class KpcaModel:
    """top components of the centered Gram matrix

    :param _gram_model: Gram matrix and centering statistics of training cloud
    :type _gram_model: Kernels.GramModel
    :param _eigenvalues: M descending positive eigenvalues
    :type _eigenvalues: numpy array
    :param _coefficients: N x M matrix, column j = eigenvector / sqrt(lambda_j)
    :type _coefficients: numpy array
    :param _requested_components: M asked for at fit time
    :type _requested_components: int
    :param _train_embedding: N x M coordinates of the training points
    :type _train_embedding: numpy array
    """

    def __init__(
        self,
        gram_model,
        eigenvalues,
        coefficients,
        requested_components,
        train_embedding,
    ):
        self._gram_model = gram_model
        self._eigenvalues = eigenvalues
        self._coefficients = coefficients
        self._requested_components = requested_components
        self._train_embedding = train_embedding
        for array in (eigenvalues, coefficients, train_embedding):
            array.setflags(write=False)

    @property
    def gram_model(self):
        return self._gram_model

    @property
    def eigenvalues(self):
        return self._eigenvalues

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def n_components(self):
        """effective number of components (may be below requested)"""
        return self._coefficients.shape[1]

    @property
    def requested_components(self):
        return self._requested_components

    @property
    def train_embedding(self):
        return self._train_embedding

    @property
    def input_dim(self):
        return self._gram_model.n_dims

    @property
    def output_dim(self):
        return self.n_components

    def transform(self, queries):
        """returns Q x M principal coordinates of queries"""
        return self._gram_model.cross_gram_centered(queries) @ self._coefficients

    def reconstruction_error_score(self, queries):
        """returns squared distance between the centered feature-space image
        of each query and its projection on the M components, clamped at 0"""
        queries = as_query_matrix(queries, self.input_dim)
        coordinates = self.transform(queries)
        self_kernel = self._gram_model.centered_self_kernel(queries)
        scores = self_kernel - np.sum(coordinates * coordinates, axis=1)
        return np.maximum(scores, 0.0)

    def to_dict(self):
        """returns plain dictionary with everything needed for scoring"""
        gram_model = self._gram_model
        return {
            "kernel": gram_model.spec.to_dict(),
            "requested_components": int(self._requested_components),
            "eigenvalues": self._eigenvalues.tolist(),
            "coefficients": self._coefficients.tolist(),
            "row_means": gram_model.row_means.tolist(),
            "grand_mean": float(gram_model.grand_mean),
            "training_features": gram_model.training_cloud.features.tolist(),
        }


def fit_kpca(gram_model, n_components, eigensolver=constants.DEFAULT_EIGENSOLVER):
    """eigendecomposes the centered Gram matrix and keeps top components

    n_components above the usable rank (or above N - 1) is lowered to it
    with a warning, no usable component at all raises
    DegenerateEmbeddingError"""
    verify_integer("n_components", n_components, 1)
    n_samples = gram_model.n_samples
    centered = gram_model.centered_gram()

    eigenvalues, eigenvectors = symmetric_eigh(centered, eigensolver)
    eigenvalues = eigenvalues[::-1]
    eigenvectors = eigenvectors[:, ::-1]

    threshold = rank_threshold(max(eigenvalues[0], 0.0), n_samples)
    usable = int(np.sum(eigenvalues > threshold))
    if usable == 0:
        raise DegenerateEmbeddingError(threshold)

    effective = min(n_components, usable, n_samples - 1)
    if effective < n_components:
        logger.warning(
            "requested M=%d exceeds usable rank, using M=%d", n_components, effective
        )

    eigenvalues = eigenvalues[:effective].copy()
    vectors = fix_column_signs(eigenvectors[:, :effective])
    coefficients = vectors / np.sqrt(eigenvalues)[np.newaxis, :]
    train_embedding = centered @ coefficients
    logger.info(
        "kernel PCA fitted on N=%d with M=%d (largest eigenvalue %.4g)",
        n_samples,
        effective,
        eigenvalues[0],
    )
    return KpcaModel(
        gram_model, eigenvalues, coefficients, n_components, train_embedding
    )


def kpca_from_dict(model_data):
    """rebuilds KpcaModel from KpcaModel.to_dict output without refitting
    the eigenproblem"""
    try:
        spec = KernelSpec(**model_data["kernel"])
        cloud = DataCloud(np.array(model_data["training_features"], dtype=float))
        row_means = np.array(model_data["row_means"], dtype=float)
        grand_mean = float(model_data["grand_mean"])
        eigenvalues = np.array(model_data["eigenvalues"], dtype=float)
        coefficients = np.array(model_data["coefficients"], dtype=float)
        requested = int(model_data["requested_components"])
    except (KeyError, TypeError, ValueError) as error:
        raise ModelFileError("<kpca>", f"missing or malformed field {error}") from error
    if coefficients.ndim != 2 or coefficients.shape != (
        cloud.n_samples,
        eigenvalues.shape[0],
    ):
        raise ModelFileError("<kpca>", "coefficients do not match training cloud")

    gram = kernel_matrix(spec, cloud.features, cloud.features)
    gram_model = GramModel(spec, cloud, gram, row_means, grand_mean)
    train_embedding = gram_model.centered_gram() @ coefficients
    return KpcaModel(gram_model, eigenvalues, coefficients, requested, train_embedding)


def transform(model, queries):
    return model.transform(queries)


def reconstruction_error_score(model, queries):
    return model.reconstruction_error_score(queries)
