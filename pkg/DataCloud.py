import numpy as np

import constants
from DetectorErrors import (
    EmptyCloudError,
    NonFiniteFeatureError,
    InvalidLabelError,
    DimensionMismatchError,
)


class DataCloud:
    """represents N samples in d dimensions with optional binary labels,
    arrays are copied and made read-only, so a cloud never changes after
    construction

    :param _features: N x d matrix, one sample per row
    :type _features: numpy array
    :param _labels: N labels (0 = inlier, 1 = outlier) or None
    :type _labels: numpy array
    """

    def __init__(self, features, labels=None):
        features = np.array(features, dtype=float)
        if features.ndim == 1:
            features = features.reshape(-1, 1)
        if features.ndim != 2 or features.shape[0] < 1 or features.shape[1] < 1:
            raise EmptyCloudError()
        if not np.all(np.isfinite(features)):
            raise NonFiniteFeatureError()
        features.setflags(write=False)
        self._features = features

        self._labels = None
        if labels is not None:
            labels = np.array(labels)
            if labels.ndim != 1 or labels.shape[0] != features.shape[0]:
                raise DimensionMismatchError(features.shape[0], labels.shape)
            for row, value in enumerate(labels):
                if value not in (constants.INLIER, constants.OUTLIER):
                    raise InvalidLabelError(row, value)
            labels = labels.astype(np.int64)
            labels.setflags(write=False)
            self._labels = labels

    @property
    def features(self):
        return self._features

    @property
    def labels(self):
        return self._labels

    @property
    def n_samples(self):
        return self._features.shape[0]

    @property
    def n_dims(self):
        return self._features.shape[1]

    @property
    def has_labels(self):
        return self._labels is not None

    @property
    def n_outliers(self):
        """number of samples labelled as outliers (None without labels)"""
        if self._labels is None:
            return None
        return int(np.sum(self._labels == constants.OUTLIER))

    @property
    def n_inliers(self):
        if self._labels is None:
            return None
        return self.n_samples - self.n_outliers

    @property
    def outlier_fraction(self):
        if self._labels is None:
            return None
        return self.n_outliers / self.n_samples

    def subset(self, indices):
        """returns new cloud made of rows at indices (labels follow)"""
        indices = np.asarray(indices, dtype=np.int64)
        labels = None if self._labels is None else self._labels[indices]
        return DataCloud(self._features[indices], labels)

    def __eq__(self, other):
        if not isinstance(other, DataCloud):
            return NotImplemented
        if self.has_labels != other.has_labels:
            return False
        if self.has_labels and not np.array_equal(self._labels, other.labels):
            return False
        return np.array_equal(self._features, other.features)

    def __repr__(self):
        return (
            f"DataCloud(n_samples={self.n_samples}, n_dims={self.n_dims}, "
            + f"n_outliers={self.n_outliers})"
        )


class SplitPlan:
    """train/test partition of the indices 0..N-1 of a cloud

    :param _train_indices: sorted indices used for training
    :type _train_indices: numpy array
    :param _test_indices: sorted indices used for testing (or validation)
    :type _test_indices: numpy array
    :param _seed: seed the partition was drawn with
    :type _seed: int
    """

    def __init__(self, train_indices, test_indices, seed):
        self._train_indices = np.sort(np.asarray(train_indices, dtype=np.int64))
        self._test_indices = np.sort(np.asarray(test_indices, dtype=np.int64))
        self._train_indices.setflags(write=False)
        self._test_indices.setflags(write=False)
        self._seed = seed

    @property
    def train_indices(self):
        return self._train_indices

    @property
    def test_indices(self):
        return self._test_indices

    @property
    def seed(self):
        return self._seed

    def apply(self, cloud):
        """returns (train cloud, test cloud)"""
        return cloud.subset(self._train_indices), cloud.subset(self._test_indices)
