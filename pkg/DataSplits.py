""" provides stratified train/test splits and stratified k-fold plans,
classes are always visited in ascending label order so a seed fully
determines the result"""
import math

import numpy as np

from DataCloud import SplitPlan
from DetectorErrors import MissingLabelsError, ClassTooSmallError
from ParameterValidation import verify_open_fraction, verify_integer
from RandomGenerators import make_generator

# guards floor(fraction * size) against products like 0.6 * 5 = 2.9999...
FLOOR_SLACK = 1e-9


def class_members(cloud):
    """returns list of (label, indices) for every class present"""
    if not cloud.has_labels:
        raise MissingLabelsError()
    labels = cloud.labels
    return [(int(label), np.flatnonzero(labels == label)) for label in np.unique(labels)]


def stratified_split(cloud, train_fraction, seed):
    """returns SplitPlan with floor(train_fraction * class size) members of
    every class in train, the rest of the class goes to test"""
    verify_open_fraction("train_fraction", train_fraction)
    members = class_members(cloud)
    for label, indices in members:
        if len(indices) < 2:
            raise ClassTooSmallError(label, len(indices), 2)

    generator = make_generator(seed)
    train_indices = []
    test_indices = []
    for _, indices in members:
        shuffled = generator.permutation(indices)
        n_train = math.floor(train_fraction * len(indices) + FLOOR_SLACK)
        train_indices.append(shuffled[:n_train])
        test_indices.append(shuffled[n_train:])
    return SplitPlan(
        np.concatenate(train_indices), np.concatenate(test_indices), seed
    )


def stratified_kfold(cloud, k, seed):
    """returns k SplitPlans, test_indices of plan i is validation fold i;
    every class is shuffled and cut into k nearly equal chunks"""
    verify_integer("k", k, 2)
    members = class_members(cloud)
    for label, indices in members:
        if len(indices) < k:
            raise ClassTooSmallError(label, len(indices), k)

    generator = make_generator(seed)
    folds = [[] for _ in range(k)]
    for _, indices in members:
        shuffled = generator.permutation(indices)
        for fold, chunk in zip(folds, np.array_split(shuffled, k)):
            fold.append(chunk)

    all_indices = np.arange(cloud.n_samples)
    plans = []
    for fold in folds:
        validation = np.concatenate(fold)
        train = np.setdiff1d(all_indices, validation, assume_unique=True)
        plans.append(SplitPlan(train, validation, seed))
    return plans
