""" k-th nearest neighbor distance baseline"""
import numpy as np
from scipy.spatial.distance import cdist

import constants
from ParameterValidation import verify_integer, as_query_matrix


class KnnModel:
    """stores training features, scoring is brute force

    :param _features: N x d training matrix
    :type _features: numpy array
    :param _k: which neighbor distance is the score
    :type _k: int
    """

    def __init__(self, features, k):
        self._features = features
        self._k = k

    @property
    def features(self):
        return self._features

    @property
    def k(self):
        return self._k

    @property
    def input_dim(self):
        return self._features.shape[1]

    def score(self, queries):
        """returns Euclidean distance of every query to its k-th nearest
        training point, a training point equal to the query counts"""
        queries = as_query_matrix(queries, self.input_dim)
        result = np.empty(queries.shape[0])
        batch_size = constants.SCORING_BATCH_SIZE
        for start in range(0, queries.shape[0], batch_size):
            distances = cdist(queries[start : start + batch_size], self._features)
            kth = np.partition(distances, self._k - 1, axis=1)[:, self._k - 1]
            result[start : start + batch_size] = kth
        return result

    def to_dict(self):
        return {"k": int(self._k), "training_features": self._features.tolist()}


def fit_knn(cloud, k=constants.DEFAULT_NEIGHBORS):
    """raises InvalidParameterError unless 1 <= k <= N"""
    verify_integer("k", k, 1, cloud.n_samples)
    return KnnModel(cloud.features, k)


def knn_score(model, queries):
    return model.score(queries)
