import numpy as np
import pytest

import constants
from DataAccess import load_csv, save_csv
from DataCloud import DataCloud
from Detectors import make_detector
from Evaluation import percentile_threshold
from main import run, grid_points
from DetectorErrors import InvalidParameterError


@pytest.fixture(autouse=True)
def isolated_directory(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def read_lines(path):
    return path.read_text(encoding="utf-8").splitlines()


def make_toy_file(tmp_path, kind=constants.UNIMODAL, seed=0, name="toy.csv"):
    path = tmp_path / name
    assert run(["generate", "--kind", kind, "--seed", str(seed), "--out", str(path)]) == 0
    return path


def test_generate_writes_labelled_cloud(tmp_path):
    path = make_toy_file(tmp_path)
    lines = read_lines(path)
    assert lines[0] == "f0,f1,label"
    assert len(lines) == 401
    assert sum(1 for line in lines[1:] if line.endswith(",1")) == 100


def test_generate_is_reproducible(tmp_path):
    first = make_toy_file(tmp_path, constants.MOONS, 4, "a.csv")
    second = make_toy_file(tmp_path, constants.MOONS, 4, "b.csv")
    assert first.read_bytes() == second.read_bytes()


def test_generate_seed_from_environment(tmp_path, monkeypatch):
    flagged = make_toy_file(tmp_path, constants.CROSS, 5, "flag.csv")
    monkeypatch.setenv("KRPD_GENERATE_SEED", "5")
    path = tmp_path / "env.csv"
    assert run(["generate", "--kind", constants.CROSS, "--out", str(path)]) == 0
    assert path.read_bytes() == flagged.read_bytes()


def test_generate_unknown_kind(tmp_path):
    code = run(["generate", "--kind", "spiral", "--out", str(tmp_path / "x.csv")])
    assert code == constants.EXIT_USAGE_ERROR


def test_unknown_command():
    assert run(["plot"]) == constants.EXIT_USAGE_ERROR


def test_fit_score(tmp_path):
    data = make_toy_file(tmp_path)
    out = tmp_path / "scores.csv"
    code = run(
        ["fit-score", "--train", str(data), "--query", str(data), "--out", str(out),
         "--detector", "rpd", "--directions", "200"]
    )
    assert code == 0
    lines = read_lines(out)
    assert lines[0] == "score,label"
    assert len(lines) == 401
    scores = np.array([float(line.split(",")[0]) for line in lines[1:]])
    assert np.all(scores >= -1.0)
    assert np.all(scores < 0.0)


def test_fit_score_saved_model_gives_same_scores(tmp_path):
    data = make_toy_file(tmp_path)
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"
    model = tmp_path / "model.yaml"
    code = run(
        ["fit-score", "--train", str(data), "--query", str(data), "--out", str(first),
         "--detector", "krpd", "--components", "20", "--directions", "200",
         "--save-model", str(model)]
    )
    assert code == 0
    assert run(["score", "--model", str(model), "--query", str(data), "--out", str(second)]) == 0
    assert first.read_text(encoding="utf-8") == second.read_text(encoding="utf-8")


def test_fit_score_with_config_file(tmp_path):
    data = make_toy_file(tmp_path)
    config = tmp_path / "run.yaml"
    config.write_text("detector: knn\nneighbors: 3\n", encoding="utf-8")
    out = tmp_path / "scores.csv"
    code = run(
        ["fit-score", "--train", str(data), "--query", str(data), "--out", str(out),
         "--config", str(config)]
    )
    assert code == 0
    assert len(read_lines(out)) == 401


def test_fit_score_degenerate_training(tmp_path):
    train = tmp_path / "train.csv"
    save_csv(DataCloud(np.ones((10, 2))), train)
    code = run(
        ["fit-score", "--train", str(train), "--query", str(train),
         "--out", str(tmp_path / "s.csv"), "--detector", "rpd"]
    )
    assert code == constants.EXIT_NUMERICAL_ERROR


def test_fit_score_degenerate_message(tmp_path, capsys):
    train = tmp_path / "train.csv"
    save_csv(DataCloud(np.ones((10, 2))), train)
    run(["fit-score", "--train", str(train), "--query", str(train),
         "--out", str(tmp_path / "s.csv"), "--detector", "rpd"])
    assert "degenerate projections" in capsys.readouterr().err


def test_fit_score_dimension_mismatch(tmp_path):
    data = make_toy_file(tmp_path)
    query = tmp_path / "query.csv"
    save_csv(DataCloud(np.zeros((3, 3))), query)
    code = run(
        ["fit-score", "--train", str(data), "--query", str(query),
         "--out", str(tmp_path / "s.csv"), "--detector", "rpd"]
    )
    assert code == constants.EXIT_DATA_ERROR


@pytest.mark.parametrize("content", [b"f0,f1\n\xff\xfe,1\n", b"f0,f1\n1\x00,1\n"])
def test_fit_score_malformed_query_bytes(tmp_path, capsys, content):
    data = make_toy_file(tmp_path)
    query = tmp_path / "query.csv"
    query.write_bytes(content)
    code = run(
        ["fit-score", "--train", str(data), "--query", str(query),
         "--out", str(tmp_path / "s.csv"), "--detector", "rpd", "--directions", "50"]
    )
    assert code == constants.EXIT_DATA_ERROR
    err = capsys.readouterr().err
    assert "error:" in err
    assert "Traceback" not in err


def test_fit_score_missing_file(tmp_path):
    code = run(
        ["fit-score", "--train", str(tmp_path / "absent.csv"), "--query", "q.csv",
         "--out", "s.csv"]
    )
    assert code == constants.EXIT_DATA_ERROR


def test_fit_score_invalid_gamma(tmp_path):
    data = make_toy_file(tmp_path)
    code = run(
        ["fit-score", "--train", str(data), "--query", str(data),
         "--out", str(tmp_path / "s.csv"), "--gamma", "-1"]
    )
    assert code == constants.EXIT_USAGE_ERROR


def test_grid_points_order():
    points = grid_points((0.0, 1.0, 2.0, 3.0), 2)
    np.testing.assert_array_equal(points, [[0, 2], [1, 2], [0, 3], [1, 3]])


def test_grid_points_invalid():
    with pytest.raises(InvalidParameterError):
        grid_points((1.0, 0.0, 0.0, 1.0), 10)
    with pytest.raises(InvalidParameterError):
        grid_points((0.0, 1.0, 0.0, 1.0), 1)


def test_grid(tmp_path):
    data = make_toy_file(tmp_path)
    out = tmp_path / "grid.csv"
    code = run(
        ["grid", "--train", str(data), "--out", str(out), "--resolution", "100",
         "--detector", "rpd", "--directions", "200"]
    )
    assert code == 0
    lines = read_lines(out)
    assert lines[0] == "x,y,score"
    assert len(lines) == 1 + 100 * 100 + 1
    assert lines[1].startswith("-6,-6,")
    assert lines[-1].startswith("# threshold=")

    train = load_csv(data, label_column="label")
    detector = make_detector(constants.RPD, {"n_directions": 200}, 0).fit(train)
    expected = percentile_threshold(detector.score(train.features), 0.25)
    assert float(lines[-1].split("=", 1)[1]) == expected


def test_grid_reversed_bounds(tmp_path):
    data = make_toy_file(tmp_path)
    code = run(
        ["grid", "--train", str(data), "--out", str(tmp_path / "g.csv"),
         "--bounds", "1", "-1", "-1", "1"]
    )
    assert code == constants.EXIT_USAGE_ERROR


def test_grid_needs_two_dimensions(tmp_path):
    train = tmp_path / "train.csv"
    save_csv(DataCloud(np.random.default_rng(0).standard_normal((20, 3))), train)
    code = run(["grid", "--train", str(train), "--out", str(tmp_path / "g.csv")])
    assert code == constants.EXIT_DATA_ERROR


def test_benchmark_empty_directory(tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    code = run(["benchmark", "--data-dir", str(empty), "--out", str(tmp_path / "t.csv")])
    assert code == constants.EXIT_DATA_ERROR


def test_benchmark_is_reproducible(tmp_path, labelled_cloud, capsys):
    data_dir = tmp_path / "data"
    data_dir.mkdir()
    save_csv(labelled_cloud, data_dir / "blobs.csv")
    outputs = []
    for name in ("first.csv", "second.csv"):
        out = tmp_path / name
        code = run(
            ["benchmark", "--data-dir", str(data_dir), "--out", str(out),
             "--detectors", "rpd,knn", "--trials", "2", "--budget", "2",
             "--directions", "50", "--no-timing"]
        )
        assert code == 0
        outputs.append(out.read_text(encoding="utf-8"))
    assert outputs[0] == outputs[1]
    lines = outputs[0].splitlines()
    assert lines[0] == "dataset,detector,auc_mean,auc_std,gamma,M,L,seconds"
    assert [line.split(",")[1] for line in lines[1:]] == ["RPD", "kNN"]
    assert "Average" in capsys.readouterr().out


def test_toy_compare(tmp_path, capsys):
    out = tmp_path / "toys.csv"
    assert run(["toy-compare", "--out", str(out)]) == 0
    lines = read_lines(out)
    assert len(lines) == 1 + len(constants.TOY_KINDS) * 3
    assert "KRPD" in capsys.readouterr().out


def test_benchmark_records_time_by_default(tmp_path, labelled_cloud):
    data_dir = tmp_path / "data"
    data_dir.mkdir()
    save_csv(labelled_cloud, data_dir / "blobs.csv")
    out = tmp_path / "table.csv"
    code = run(
        ["benchmark", "--data-dir", str(data_dir), "--out", str(out),
         "--detectors", "rpd", "--trials", "1", "--directions", "50"]
    )
    assert code == 0
    seconds = read_lines(out)[1].split(",")[-1]
    assert float(seconds) >= 0.0
