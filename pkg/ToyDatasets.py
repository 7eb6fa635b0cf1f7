"""generators of the four two-dimensional toy clouds

each cloud has constants.TOY_INLIERS inliers followed by
constants.TOY_OUTLIERS outliers drawn uniformly from the outlier box.
inlier geometry:
unimodal - standard normal scaled by TOY_GAUSSIAN_SCALE
multimodal - equal thirds around MULTIMODAL_CENTERS, same scale
cross - plus shape of two perpendicular segments through the origin
moons - upper unit semicircle at the origin and a reflected lower one
        centered at MOONS_LOWER_CENTER
cross and moons inliers get isotropic gaussian noise TOY_NOISE
"""
import numpy as np

import constants
from DataCloud import DataCloud
from DetectorErrors import InvalidParameterError
from RandomGenerators import make_generator


def unimodal_inliers(generator, count):
    return constants.TOY_GAUSSIAN_SCALE * generator.standard_normal((count, 2))


def multimodal_inliers(generator, count):
    centers = constants.MULTIMODAL_CENTERS
    # split count as evenly as possible, earlier centers get the remainder
    sizes = [len(part) for part in np.array_split(np.arange(count), len(centers))]
    parts = []
    for center, size in zip(centers, sizes):
        noise = constants.TOY_GAUSSIAN_SCALE * generator.standard_normal((size, 2))
        parts.append(np.asarray(center) + noise)
    return np.vstack(parts)


def cross_inliers(generator, count):
    half_length = constants.CROSS_SEGMENT_LENGTH / 2
    horizontal_count = count // 2
    vertical_count = count - horizontal_count

    horizontal = np.zeros((horizontal_count, 2))
    horizontal[:, 0] = generator.uniform(-half_length, half_length, horizontal_count)
    vertical = np.zeros((vertical_count, 2))
    vertical[:, 1] = generator.uniform(-half_length, half_length, vertical_count)

    points = np.vstack([horizontal, vertical])
    return points + constants.TOY_NOISE * generator.standard_normal(points.shape)


def moons_inliers(generator, count):
    radius = constants.MOONS_RADIUS
    upper_count = count // 2
    lower_count = count - upper_count

    angles = generator.uniform(0.0, np.pi, upper_count)
    upper = np.column_stack([radius * np.cos(angles), radius * np.sin(angles)])

    angles = generator.uniform(0.0, np.pi, lower_count)
    center_x, center_y = constants.MOONS_LOWER_CENTER
    lower = np.column_stack(
        [center_x - radius * np.cos(angles), center_y - radius * np.sin(angles)]
    )

    points = np.vstack([upper, lower])
    return points + constants.TOY_NOISE * generator.standard_normal(points.shape)


TOY_INLIER_GENERATORS = {
    constants.UNIMODAL: unimodal_inliers,
    constants.MULTIMODAL: multimodal_inliers,
    constants.CROSS: cross_inliers,
    constants.MOONS: moons_inliers,
}


def generate_toy(kind, seed):
    """returns labelled toy DataCloud of given kind, equal (kind, seed)
    give bit-identical clouds"""
    if kind not in TOY_INLIER_GENERATORS:
        raise InvalidParameterError("kind", kind, f"one of {constants.TOY_KINDS}")
    generator = make_generator(seed)

    inliers = TOY_INLIER_GENERATORS[kind](generator, constants.TOY_INLIERS)
    low, high = constants.TOY_OUTLIER_BOX
    outliers = generator.uniform(low, high, (constants.TOY_OUTLIERS, 2))

    labels = np.concatenate(
        [
            np.full(constants.TOY_INLIERS, constants.INLIER),
            np.full(constants.TOY_OUTLIERS, constants.OUTLIER),
        ]
    )
    return DataCloud(np.vstack([inliers, outliers]), labels)
