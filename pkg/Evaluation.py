""" ROC AUC, percentile thresholds and evaluation reports"""
import numpy as np
from scipy.stats import rankdata

import constants
from DetectorErrors import SingleClassError, DimensionMismatchError
from ParameterValidation import as_value_vector, verify_open_fraction


def roc_auc(scores, labels):
    """Mann-Whitney AUC with mid-ranks for ties, higher score = outlier

    (sum of outlier ranks - n1 (n1 + 1) / 2) / (n1 n0)"""
    scores = as_value_vector(scores)
    labels = np.asarray(labels).ravel()
    if labels.shape != scores.shape:
        raise DimensionMismatchError(scores.shape[0], labels.shape[0])
    outliers = labels == constants.OUTLIER
    n_outliers = int(np.sum(outliers))
    n_inliers = labels.shape[0] - n_outliers
    if n_outliers == 0 or n_inliers == 0:
        raise SingleClassError()
    ranks = rankdata(scores, method="average")
    rank_sum = float(np.sum(ranks[outliers]))
    return (rank_sum - n_outliers * (n_outliers + 1) / 2.0) / (n_outliers * n_inliers)


def percentile_threshold(scores, contamination):
    """(100 * (1 - contamination))-th percentile of scores, linear
    interpolation between order statistics"""
    scores = as_value_vector(scores)
    verify_open_fraction("contamination", contamination)
    return float(np.percentile(scores, 100.0 * (1.0 - contamination)))


def flag_outliers(scores, threshold):
    """True where score is strictly greater than threshold"""
    return np.asarray(scores, dtype=float) > threshold


def confusion_counts(flags, labels):
    """returns (tp, fp, tn, fn) with outliers as the positive class"""
    flags = np.asarray(flags, dtype=bool)
    outliers = np.asarray(labels) == constants.OUTLIER
    tp = int(np.sum(flags & outliers))
    fp = int(np.sum(flags & ~outliers))
    tn = int(np.sum(~flags & ~outliers))
    fn = int(np.sum(~flags & outliers))
    return (tp, fp, tn, fn)


class EvalReport:
    """ROC AUC of one or several scorings of labelled data

    :param _aucs: AUC of every aggregated trial
    :type _aucs: list
    :param _thresholds: percentile threshold of every trial
    :type _thresholds: list
    :param _confusion: (tp, fp, tn, fn) summed over trials
    :type _confusion: tuple
    """

    def __init__(self, aucs, thresholds, confusion):
        self._aucs = [float(auc) for auc in aucs]
        self._thresholds = [float(threshold) for threshold in thresholds]
        self._confusion = tuple(int(count) for count in confusion)

    @property
    def aucs(self):
        return list(self._aucs)

    @property
    def auc(self):
        """AUC of a single trial, the mean when trials were aggregated"""
        return self.auc_mean

    @property
    def threshold(self):
        return float(np.mean(self._thresholds))

    @property
    def confusion(self):
        return self._confusion

    @property
    def n_trials_aggregated(self):
        return len(self._aucs)

    @property
    def auc_mean(self):
        return float(np.mean(self._aucs))

    @property
    def auc_std(self):
        """sample standard deviation, 0 for a single trial"""
        if len(self._aucs) < 2:
            return 0.0
        return float(np.std(self._aucs, ddof=1))

    def to_dict(self):
        tp, fp, tn, fn = self._confusion
        return {
            "auc_mean": self.auc_mean,
            "auc_std": self.auc_std,
            "aucs": self.aucs,
            "threshold": self.threshold,
            "confusion": {"tp": tp, "fp": fp, "tn": tn, "fn": fn},
        }


def evaluate_scores(scores, labels, contamination):
    """AUC, percentile threshold and confusion counts of one scoring"""
    auc = roc_auc(scores, labels)
    threshold = percentile_threshold(scores, contamination)
    confusion = confusion_counts(flag_outliers(scores, threshold), labels)
    return EvalReport([auc], [threshold], confusion)


def aggregate_reports(reports):
    """merges reports of independent trials into one"""
    aucs = []
    thresholds = []
    confusion = np.zeros(4, dtype=np.int64)
    for report in reports:
        aucs.extend(report.aucs)
        thresholds.extend([report.threshold] * report.n_trials_aggregated)
        confusion += np.asarray(report.confusion)
    return EvalReport(aucs, thresholds, confusion)


def format_mean_std(mean, std):
    return f"{mean:.3f} ± {std:.3f}"
