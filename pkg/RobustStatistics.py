""" robust location and scale estimators"""
import numpy as np

from ParameterValidation import as_value_vector


def median(values):
    """middle order statistic, mean of the two middle ones for even length"""
    return float(np.median(as_value_vector(values)))


def mad(values):
    """median absolute deviation from the median, no consistency constant"""
    vector = as_value_vector(values)
    return float(np.median(np.abs(vector - np.median(vector))))


def column_medians_and_mads(matrix):
    """returns (medians, mads) of every column of matrix"""
    medians = np.median(matrix, axis=0)
    mads = np.median(np.abs(matrix - medians[np.newaxis, :]), axis=0)
    return medians, mads
