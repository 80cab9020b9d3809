"""Classification metrics: thresholded confusion-matrix ratios and ROC AUC
in the rank-based Mann-Whitney form."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from scipy.stats import rankdata

METRIC_NAMES = ("accuracy", "recall", "fpr", "precision", "auc")


@dataclass(frozen=True)
class MetricsRecord:
    accuracy: float
    recall: float
    fpr: float
    precision: float
    auc: float  # NaN until roc_auc is filled in
    threshold: float
    tp: int
    fp: int
    tn: int
    fn: int

    def as_dict(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in METRIC_NAMES}


def _validate(scores, labels):
    scores = np.asarray(scores, dtype=np.float64)
    labels = np.asarray(labels, dtype=bool)
    if scores.shape != labels.shape or scores.ndim != 1 or scores.size < 1:
        raise ValueError("scores and labels must be equal-length 1-D arrays")
    n_pos = int(labels.sum())
    if n_pos == 0 or n_pos == labels.size:
        raise ValueError("need at least one positive and one negative label")
    return scores, labels


def confusion_metrics(scores, labels, threshold: float = 0.5) -> MetricsRecord:
    """Thresholded metrics: predict positive iff score >= threshold.

    Precision with no positive predictions is defined as 0 (the TP+FP count
    is kept in the record). The AUC slot is left NaN.
    """
    scores, labels = _validate(scores, labels)
    pred = scores >= threshold
    tp = int(np.sum(pred & labels))
    fp = int(np.sum(pred & ~labels))
    tn = int(np.sum(~pred & ~labels))
    fn = int(np.sum(~pred & labels))
    precision = tp / (tp + fp) if tp + fp > 0 else 0.0
    return MetricsRecord(
        accuracy=(tp + tn) / scores.size,
        recall=tp / (tp + fn),
        fpr=fp / (fp + tn),
        precision=precision,
        auc=float("nan"),
        threshold=threshold,
        tp=tp,
        fp=fp,
        tn=tn,
        fn=fn,
    )


def roc_auc(scores, labels) -> float:
    """Area under the ROC curve.

    Computed by tied-rank summation, which equals both trapezoidal
    integration over all distinct thresholds and the Mann-Whitney statistic
    (#{pos > neg} + 0.5 #{pos = neg}) / (P * N).
    """
    scores, labels = _validate(scores, labels)
    ranks = rankdata(scores)
    n_pos = int(labels.sum())
    n_neg = scores.size - n_pos
    rank_sum = float(ranks[labels].sum())
    return (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def evaluate_scores(scores, labels, threshold: float = 0.5) -> MetricsRecord:
    """Confusion metrics plus AUC in one record."""
    rec = confusion_metrics(scores, labels, threshold)
    return replace(rec, auc=roc_auc(scores, labels))
