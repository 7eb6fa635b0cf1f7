""" provides functions verifying hyperparameters and query matrices
before they reach numerical code; every function raises an error from
DetectorErrors when the check fails"""
import math

import numpy as np

from DetectorErrors import (
    InvalidParameterError,
    DimensionMismatchError,
    NonFiniteFeatureError,
    EmptyInputError,
)


def verify_positive_real(name, value):
    """raises InvalidParameterError unless value is a finite real > 0"""
    if isinstance(value, bool) or not isinstance(value, (int, float, np.number)):
        raise InvalidParameterError(name, value, "a positive real number")
    if not math.isfinite(value) or value <= 0:
        raise InvalidParameterError(name, value, "a positive real number")


def verify_integer(name, value, minimum, maximum=None):
    """raises InvalidParameterError unless minimum <= value (<= maximum)"""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise InvalidParameterError(name, value, "an integer")
    if value < minimum or (maximum is not None and value > maximum):
        if maximum is None:
            requirement = f"an integer >= {minimum}"
        else:
            requirement = f"an integer in [{minimum}, {maximum}]"
        raise InvalidParameterError(name, value, requirement)


def verify_open_fraction(name, value):
    """raises InvalidParameterError unless 0 < value < 1"""
    if isinstance(value, bool) or not isinstance(value, (int, float, np.number)):
        raise InvalidParameterError(name, value, "a real number in (0, 1)")
    if not 0.0 < value < 1.0:
        raise InvalidParameterError(name, value, "a real number in (0, 1)")


def as_query_matrix(queries, n_dims):
    """converts queries to a float (Q, d) matrix, a single d-vector
    is treated as one query

    raises DimensionMismatchError if the number of columns is not n_dims
    and NonFiniteFeatureError for NaN/Inf entries"""
    matrix = np.asarray(queries, dtype=float)
    if matrix.ndim == 1:
        if matrix.shape[0] != n_dims:
            raise DimensionMismatchError(n_dims, matrix.shape[0])
        matrix = matrix.reshape(1, -1)
    if matrix.ndim != 2 or matrix.shape[1] != n_dims:
        found = matrix.shape[1] if matrix.ndim == 2 else matrix.shape
        raise DimensionMismatchError(n_dims, found)
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteFeatureError()
    return matrix


def as_value_vector(values):
    """converts values to a non-empty finite float vector"""
    vector = np.asarray(values, dtype=float).ravel()
    if vector.size == 0:
        raise EmptyInputError("values")
    if not np.all(np.isfinite(vector)):
        raise NonFiniteFeatureError()
    return vector
