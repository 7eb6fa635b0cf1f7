"""dense symmetric eigensolvers returning (eigenvalues, eigenvectors) in
ascending eigenvalue order, eigenvectors are the columns"""
import logging

import numpy as np

import constants
from DetectorErrors import EigensolverError, InvalidParameterError

logger = logging.getLogger(__name__)


def off_diagonal_norm(matrix):
    """frobenius norm of matrix without its diagonal"""
    return np.sqrt(max(np.sum(matrix * matrix) - np.sum(np.diag(matrix) ** 2), 0.0))


def rotate(matrix, vectors, p, q):
    """applies one Jacobi rotation zeroing matrix[p, q] in place"""
    apq = matrix[p, q]
    theta = (matrix[q, q] - matrix[p, p]) / (2.0 * apq)
    sign = 1.0 if theta >= 0 else -1.0
    t = sign / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    column_p = matrix[:, p].copy()
    column_q = matrix[:, q].copy()
    matrix[:, p] = c * column_p - s * column_q
    matrix[:, q] = s * column_p + c * column_q

    row_p = matrix[p, :].copy()
    row_q = matrix[q, :].copy()
    matrix[p, :] = c * row_p - s * row_q
    matrix[q, :] = s * row_p + c * row_q

    vector_p = vectors[:, p].copy()
    vector_q = vectors[:, q].copy()
    vectors[:, p] = c * vector_p - s * vector_q
    vectors[:, q] = s * vector_p + c * vector_q


def jacobi_eigh(
    matrix,
    tolerance=constants.JACOBI_TOLERANCE,
    max_sweeps=constants.JACOBI_MAX_SWEEPS,
):
    """cyclic Jacobi eigendecomposition of a symmetric matrix

    sweeps over all pairs p < q until the off-diagonal frobenius norm is
    at most tolerance * ||matrix||_F, raises EigensolverError after
    max_sweeps sweeps without convergence"""
    matrix = np.array(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidParameterError("matrix", matrix.shape, "a square matrix")
    working = 0.5 * (matrix + matrix.T)
    size = working.shape[0]
    vectors = np.eye(size)
    limit = tolerance * np.linalg.norm(working)

    for sweep in range(max_sweeps + 1):
        off_norm = off_diagonal_norm(working)
        if off_norm <= limit:
            logger.debug("Jacobi converged after %d sweeps", sweep)
            break
        if sweep == max_sweeps:
            raise EigensolverError(
                "Jacobi",
                f"no convergence after {max_sweeps} sweeps (off-diagonal norm {off_norm:.3g})",
            )
        for p in range(size - 1):
            for q in range(p + 1, size):
                if working[p, q] != 0.0:
                    rotate(working, vectors, p, q)

    eigenvalues = np.diag(working).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return eigenvalues[order], vectors[:, order]


def lapack_eigh(matrix):
    """LAPACK symmetric eigensolver (numpy.linalg.eigh)"""
    try:
        return np.linalg.eigh(matrix)
    except np.linalg.LinAlgError as error:
        raise EigensolverError("LAPACK", str(error)) from None


EIGENSOLVER_FUNCTIONS = {
    constants.EIGH_SOLVER: lapack_eigh,
    constants.JACOBI_SOLVER: jacobi_eigh,
}


def symmetric_eigh(matrix, solver=constants.DEFAULT_EIGENSOLVER):
    """dispatches to the eigensolver named by solver"""
    if solver not in EIGENSOLVER_FUNCTIONS:
        raise InvalidParameterError(
            "eigensolver", solver, f"one of {constants.EIGENSOLVERS}"
        )
    return EIGENSOLVER_FUNCTIONS[solver](matrix)
