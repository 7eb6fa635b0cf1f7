import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from DataCloud import DataCloud  # noqa: E402
from ToyDatasets import generate_toy  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: acceptance-scale runs (deselect with -m 'not slow')"
    )


@pytest.fixture
def random_cloud():
    """40 unlabelled points in 3 dimensions"""
    generator = np.random.default_rng(7)
    return DataCloud(generator.standard_normal((40, 3)))


@pytest.fixture
def labelled_cloud():
    """60 gaussian inliers around the origin and 20 far outliers"""
    generator = np.random.default_rng(11)
    inliers = 0.5 * generator.standard_normal((60, 2))
    outliers = generator.uniform(3.0, 5.0, (20, 2)) * generator.choice([-1.0, 1.0], (20, 2))
    labels = np.concatenate([np.zeros(60, dtype=int), np.ones(20, dtype=int)])
    return DataCloud(np.vstack([inliers, outliers]), labels)


@pytest.fixture
def toy_cloud():
    """factory of labelled toy clouds, cached per (kind, seed)"""
    cache = {}

    def make(kind, seed=0):
        if (kind, seed) not in cache:
            cache[(kind, seed)] = generate_toy(kind, seed)
        return cache[(kind, seed)]

    return make
