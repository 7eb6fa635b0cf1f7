import numpy as np
import pytest

import constants
from DetectorErrors import InvalidParameterError
from ToyDatasets import generate_toy


@pytest.mark.parametrize("kind", constants.TOY_KINDS)
def test_generate_toy_shape_and_labels(kind):
    cloud = generate_toy(kind, seed=3)
    assert cloud.n_samples == 400
    assert cloud.n_dims == 2
    assert cloud.n_outliers == 100
    assert np.all(cloud.labels[:300] == constants.INLIER)
    assert np.all(cloud.labels[300:] == constants.OUTLIER)


@pytest.mark.parametrize("kind", constants.TOY_KINDS)
def test_generate_toy_outliers_inside_box(kind):
    cloud = generate_toy(kind, seed=1)
    outliers = cloud.features[300:]
    assert np.all(outliers >= -6.0)
    assert np.all(outliers < 6.0)


def test_generate_toy_deterministic():
    assert generate_toy(constants.MOONS, 3) == generate_toy(constants.MOONS, 3)
    assert generate_toy(constants.MOONS, 3) != generate_toy(constants.MOONS, 4)


def test_generate_toy_unimodal_is_concentrated():
    inliers = generate_toy(constants.UNIMODAL, 0).features[:300]
    assert np.all(np.abs(inliers.mean(axis=0)) < 0.1)
    assert np.all(inliers.std(axis=0) < 0.5)


def test_generate_toy_multimodal_around_centers():
    inliers = generate_toy(constants.MULTIMODAL, 0).features[:300]
    centers = np.asarray(constants.MULTIMODAL_CENTERS)
    distances = np.linalg.norm(inliers[:, None, :] - centers[None, :, :], axis=2)
    assert np.all(distances.min(axis=1) < 2.0)
    counts = np.bincount(distances.argmin(axis=1), minlength=len(centers))
    assert np.all(counts > 50)


def test_generate_toy_cross_near_axes():
    inliers = generate_toy(constants.CROSS, 0).features[:300]
    assert np.all(np.min(np.abs(inliers), axis=1) < 0.3)


def test_generate_toy_sizes_follow_constants(monkeypatch):
    monkeypatch.setattr("constants.TOY_INLIERS", 30)
    monkeypatch.setattr("constants.TOY_OUTLIERS", 10)
    cloud = generate_toy(constants.CROSS, 0)
    assert cloud.n_samples == 40
    assert cloud.n_outliers == 10


def test_generate_toy_unknown_kind():
    with pytest.raises(InvalidParameterError):
        generate_toy("spiral", 0)
