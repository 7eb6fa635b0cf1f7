import logging
import math

import numpy as np
import pytest

import constants
from DetectorErrors import InvalidParameterError, SearchFailedError
from HyperparameterSearch import SearchSpace, random_search
from RandomGenerators import make_generator, spawn_seeds


def test_SearchSpace_defaults():
    space = SearchSpace()
    assert space.gamma_range == (1e-5, 1.0)
    assert space.m_range == (10, 500)
    assert space.budget == 25
    assert space.neighbor_choices == (1, 5, 10, 20)


def test_SearchSpace_invalid():
    with pytest.raises(InvalidParameterError):
        SearchSpace(gamma_range=(1.0, 0.1))
    with pytest.raises(InvalidParameterError):
        SearchSpace(gamma_range=(0.0, 1.0))
    with pytest.raises(InvalidParameterError):
        SearchSpace(m_range=(20, 10))
    with pytest.raises(InvalidParameterError):
        SearchSpace(budget=0)


def test_SearchSpace_sample_ranges():
    space = SearchSpace()
    generator = make_generator(0)
    for _ in range(500):
        sample = space.sample(generator, constants.KRPD, fold_train_size=64)
        assert 1e-5 <= sample["gamma"] <= 1.0
        assert 10 <= sample["n_components"] <= 63
        rff = space.sample(generator, constants.KRPD_RFF, fold_train_size=64)
        assert 10 <= rff["n_features"] <= 500
        knn = space.sample(generator, constants.KNN, fold_train_size=64)
        assert knn["k"] in (1, 5, 10, 20)
    assert space.sample(generator, constants.RPD, 64) == {}


def test_SearchSpace_gamma_log_uniform():
    space = SearchSpace()
    generator = make_generator(1)
    exponents = [math.log10(space.sample_gamma(generator)) for _ in range(4000)]
    # a log-uniform draw spends about a fifth of its mass in every decade
    below = np.mean(np.array(exponents) < -4.0)
    assert below == pytest.approx(0.2, abs=0.04)


def test_random_search_budget_one(labelled_cloud):
    space = SearchSpace(budget=1, seed=3)
    result = random_search(labelled_cloud, space, constants.KRPD, n_directions=50)
    expected = space.sample(make_generator(spawn_seeds(3, 3)[0]), constants.KRPD, 64)
    assert len(result.trials) == 1
    assert result.hyperparameters["gamma"] == expected["gamma"]
    assert result.hyperparameters["n_directions"] == 50
    assert 0.0 <= result.cv_auc <= 1.0


def test_random_search_deterministic(labelled_cloud):
    space = SearchSpace(budget=3, seed=5)
    first = random_search(labelled_cloud, space, constants.KPCA)
    second = random_search(labelled_cloud, space, constants.KPCA)
    assert first.hyperparameters == second.hyperparameters
    assert first.cv_auc == second.cv_auc


def test_random_search_picks_best_trial(labelled_cloud):
    result = random_search(labelled_cloud, SearchSpace(budget=4, seed=1), constants.KNN)
    assert result.cv_auc == max(trial.cv_auc for trial in result.trials)


def test_random_search_rpd_single_trial(labelled_cloud):
    result = random_search(labelled_cloud, SearchSpace(budget=10), constants.RPD, n_directions=30)
    assert len(result.trials) == 1
    assert result.hyperparameters == {"n_directions": 30}


def test_random_search_failed_trials(labelled_cloud, caplog):
    space = SearchSpace(budget=2, seed=0)
    with caplog.at_level(logging.WARNING):
        with pytest.raises(SearchFailedError):
            random_search(
                labelled_cloud,
                space,
                constants.KRPD,
                n_directions=10,
                extra_hyperparameters={"eigensolver": "power"},
            )
    assert "failed" in caplog.text


def test_random_search_moons(toy_cloud):
    cloud = toy_cloud(constants.MOONS, 0)
    space = SearchSpace(budget=20, seed=0)
    result = random_search(cloud, space, constants.KRPD, n_directions=300)
    assert result.cv_auc >= 0.9


def test_random_search_eigensolver_failure_fails_trials(labelled_cloud, monkeypatch):
    def failing_eigh(matrix):
        raise np.linalg.LinAlgError("Eigenvalues did not converge")

    monkeypatch.setattr(np.linalg, "eigh", failing_eigh)
    with pytest.raises(SearchFailedError):
        random_search(labelled_cloud, SearchSpace(budget=2), constants.KPCA)
