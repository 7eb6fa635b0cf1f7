import pytest

import constants
from DetectorErrors import InvalidParameterError, DataFileError
from RunConfig import RunConfig, read_config_file, merge_settings


def test_defaults():
    config = RunConfig()
    assert config.detector == constants.KRPD
    assert config.seed == 0
    assert config.contamination == 0.25
    assert config.eigensolver == constants.DEFAULT_EIGENSOLVER
    assert config.detectors == constants.BENCHMARK_DETECTORS
    assert config.gamma is None
    assert config.trials is None
    assert config.hyperparameters() == {"eigensolver": constants.DEFAULT_EIGENSOLVER}


def test_detectors_from_comma_string():
    config = RunConfig(detectors="rpd, knn")
    assert config.detectors == (constants.RPD, constants.KNN)


@pytest.mark.parametrize(
    "settings",
    [
        {"detector": "lof"},
        {"gamma": 0},
        {"gamma": -1.0},
        {"components": 0},
        {"directions": 2.5},
        {"contamination": 1.0},
        {"contamination": 0},
        {"detectors": "rpd,lof"},
        {"eigensolver": "arpack"},
        {"seed": -1},
    ],
)
def test_invalid_settings(settings):
    with pytest.raises(InvalidParameterError):
        RunConfig(**settings)


def test_hyperparameters_per_kind():
    config = RunConfig(gamma=0.5, components=7, directions=100, features=40, neighbors=3)
    assert config.hyperparameters(constants.RPD) == {"n_directions": 100}
    assert config.hyperparameters(constants.KRPD) == {
        "gamma": 0.5,
        "n_components": 7,
        "eigensolver": constants.DEFAULT_EIGENSOLVER,
        "n_directions": 100,
    }
    assert config.hyperparameters(constants.KRPD_RFF) == {
        "gamma": 0.5,
        "n_features": 40,
        "n_directions": 100,
    }
    assert config.hyperparameters(constants.KNN) == {"k": 3}


def test_merge_settings_flags_override():
    merged = merge_settings({"gamma": 1.0, "seed": 4}, {"gamma": 2.0, "seed": None, "bounds": ()})
    assert merged == {"gamma": 2.0, "seed": 4}


def test_from_sources(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("detector: knn\nneighbors: 10\nseed: 3\n", encoding="utf-8")
    config = RunConfig.from_sources(path, neighbors=None, seed=9)
    assert config.detector == constants.KNN
    assert config.neighbors == 10
    assert config.seed == 9


def test_read_config_unknown_key(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("gamma: 1.0\nwidth: 3\n", encoding="utf-8")
    with pytest.raises(InvalidParameterError):
        read_config_file(path)


def test_read_config_not_mapping(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(InvalidParameterError):
        read_config_file(path)


def test_read_config_empty_file(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("", encoding="utf-8")
    assert read_config_file(path) == {}


def test_read_config_missing_file(tmp_path):
    with pytest.raises(DataFileError):
        read_config_file(tmp_path / "absent.yaml")
