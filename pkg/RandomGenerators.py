"""seeded, splittable random number generation

every random draw in the project goes through a numpy PCG64 generator
created here; independent streams are obtained only by splitting a seed
with spawn_seeds"""
import numpy as np

from DetectorErrors import InvalidParameterError

SEED_LIMIT = 2**64


def verify_seed(seed):
    """raises InvalidParameterError if seed is not a 64-bit unsigned int"""
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise InvalidParameterError("seed", seed, "an integer")
    if seed < 0 or seed >= SEED_LIMIT:
        raise InvalidParameterError("seed", seed, "an integer in [0, 2**64)")


def make_generator(seed):
    """returns numpy Generator backed by PCG64 for given seed"""
    verify_seed(seed)
    return np.random.Generator(np.random.PCG64(int(seed)))


def spawn_seeds(seed, count):
    """splits seed into count independent 64-bit child seeds"""
    verify_seed(seed)
    children = np.random.SeedSequence(int(seed)).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]
