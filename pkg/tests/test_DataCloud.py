import numpy as np
import pytest

from DataCloud import DataCloud, SplitPlan
from DetectorErrors import (
    EmptyCloudError,
    NonFiniteFeatureError,
    InvalidLabelError,
    DimensionMismatchError,
)


def test_DataCloud_init():
    cloud = DataCloud([[0.0, 1.0], [2.0, 3.0], [4.0, 5.0]], [0, 0, 1])
    assert cloud.n_samples == 3
    assert cloud.n_dims == 2
    assert cloud.has_labels
    assert cloud.n_outliers == 1
    assert cloud.n_inliers == 2
    assert cloud.outlier_fraction == pytest.approx(1 / 3)


def test_DataCloud_one_dimensional_input():
    cloud = DataCloud([-1.0, 0.0, 1.0])
    assert cloud.n_dims == 1
    assert cloud.n_samples == 3
    assert not cloud.has_labels
    assert cloud.n_outliers is None


def test_DataCloud_is_a_copy_and_read_only():
    features = np.zeros((3, 2))
    cloud = DataCloud(features)
    features[0, 0] = 5.0
    assert cloud.features[0, 0] == 0.0
    with pytest.raises(ValueError):
        cloud.features[0, 0] = 1.0


def test_DataCloud_invalid():
    with pytest.raises(EmptyCloudError):
        DataCloud(np.zeros((0, 2)))
    with pytest.raises(NonFiniteFeatureError):
        DataCloud([[np.inf, 0.0]])
    with pytest.raises(InvalidLabelError):
        DataCloud([[0.0], [1.0]], [0, 2])
    with pytest.raises(DimensionMismatchError):
        DataCloud([[0.0], [1.0]], [0])


def test_DataCloud_subset():
    cloud = DataCloud([[0.0], [1.0], [2.0], [3.0]], [0, 1, 0, 1])
    part = cloud.subset([3, 1])
    assert np.array_equal(part.features.ravel(), [3.0, 1.0])
    assert np.array_equal(part.labels, [1, 1])


def test_DataCloud_equality():
    first = DataCloud([[0.0], [1.0]], [0, 1])
    assert first == DataCloud([[0.0], [1.0]], [0, 1])
    assert first != DataCloud([[0.0], [1.0]])
    assert first != DataCloud([[0.0], [2.0]], [0, 1])


def test_SplitPlan_apply():
    cloud = DataCloud([[0.0], [1.0], [2.0], [3.0]], [0, 0, 1, 1])
    plan = SplitPlan([2, 0], [3, 1], seed=0)
    assert np.array_equal(plan.train_indices, [0, 2])
    train, test = plan.apply(cloud)
    assert np.array_equal(train.features.ravel(), [0.0, 2.0])
    assert np.array_equal(test.labels, [0, 1])
