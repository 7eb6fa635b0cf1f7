import numpy as np
import pytest

from DetectorErrors import InvalidParameterError
from RandomGenerators import make_generator, spawn_seeds, verify_seed


def test_make_generator_is_deterministic():
    first = make_generator(5).standard_normal(10)
    second = make_generator(5).standard_normal(10)
    assert np.array_equal(first, second)


def test_make_generator_different_seeds():
    first = make_generator(1).standard_normal(10)
    second = make_generator(2).standard_normal(10)
    assert not np.array_equal(first, second)


def test_verify_seed_range():
    verify_seed(0)
    verify_seed(2**64 - 1)
    with pytest.raises(InvalidParameterError):
        verify_seed(-1)
    with pytest.raises(InvalidParameterError):
        verify_seed(2**64)
    with pytest.raises(InvalidParameterError):
        verify_seed(1.5)
    with pytest.raises(InvalidParameterError):
        verify_seed(True)


def test_spawn_seeds_independent_and_deterministic():
    seeds = spawn_seeds(3, 4)
    assert len(seeds) == 4
    assert len(set(seeds)) == 4
    assert seeds == spawn_seeds(3, 4)
    for seed in seeds:
        verify_seed(seed)


def test_spawn_seeds_prefix_stable():
    assert spawn_seeds(9, 2) == spawn_seeds(9, 5)[:2]
