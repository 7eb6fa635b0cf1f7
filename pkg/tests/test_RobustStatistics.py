import numpy as np
import pytest

from DetectorErrors import EmptyInputError
from RobustStatistics import median, mad, column_medians_and_mads


def sorted_median(values):
    ordered = sorted(values)
    middle = len(ordered) // 2
    if len(ordered) % 2:
        return ordered[middle]
    return (ordered[middle - 1] + ordered[middle]) / 2


def test_median_examples():
    assert median([3.0, 1.0, 2.0]) == 2.0
    assert median([4.0, 1.0, 3.0, 2.0]) == 2.5
    assert median([7.0]) == 7.0


def test_mad_examples():
    assert mad([1.0, 2.0, 3.0, 4.0, 100.0]) == 1.0
    assert mad([5.0, 5.0, 5.0]) == 0.0
    assert mad([-1.0, 0.0, 1.0]) == 1.0


def test_median_and_mad_match_sorting_oracle():
    generator = np.random.default_rng(0)
    for _ in range(1000):
        values = list(generator.standard_normal(generator.integers(1, 30)))
        center = sorted_median(values)
        assert median(values) == pytest.approx(center, abs=1e-12)
        spread = sorted_median([abs(value - center) for value in values])
        assert mad(values) == pytest.approx(spread, abs=1e-12)


def test_median_empty():
    with pytest.raises(EmptyInputError):
        median([])
    with pytest.raises(EmptyInputError):
        mad([])


def test_column_medians_and_mads():
    matrix = np.array([[1.0, 10.0], [2.0, 20.0], [3.0, 60.0]])
    medians, mads = column_medians_and_mads(matrix)
    assert np.array_equal(medians, [2.0, 20.0])
    assert np.array_equal(mads, [1.0, 10.0])
