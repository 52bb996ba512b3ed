"""Confusion matrices and derived classification metrics.

Rows are true classes, columns are predicted classes, both in ascending
class-code order. Precision/recall with a zero denominator are reported as
0.0 together with an ``undefined`` flag instead of NaN.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ConfusionMatrix:
    counts: np.ndarray  # (C, C) non-negative ints
    classes: tuple[int, ...]

    def __post_init__(self) -> None:
        c = len(self.classes)
        if self.counts.shape != (c, c):
            raise ValueError(f"counts must be {c}x{c}, got {self.counts.shape}")
        if np.any(self.counts < 0):
            raise ValueError("confusion counts must be non-negative")

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class ClassMetrics:
    label: int
    precision: float
    recall: float
    f1: float
    support: int
    precision_undefined: bool = False
    recall_undefined: bool = False


@dataclass(frozen=True)
class AggregateMetrics:
    accuracy: float
    macro_precision: float
    macro_recall: float
    macro_f1: float
    weighted_precision: float
    weighted_recall: float
    weighted_f1: float


def confusion_matrix(y_true, y_pred, classes) -> ConfusionMatrix:
    y_true = np.asarray(y_true, dtype=np.int64)
    y_pred = np.asarray(y_pred, dtype=np.int64)
    if y_true.shape != y_pred.shape:
        raise ValueError(f"length mismatch: {y_true.size} true vs {y_pred.size} predicted")
    codes = np.asarray(sorted(int(c) for c in classes), dtype=np.int64)
    known = np.isin(y_true, codes) & np.isin(y_pred, codes)
    if not np.all(known):
        bad = np.unique(np.concatenate([y_true[~known], y_pred[~known]]))
        raise ValueError(f"labels outside the class set: {bad.tolist()}")

    counts = np.zeros((codes.size, codes.size), dtype=np.int64)
    ti = np.searchsorted(codes, y_true)
    pi = np.searchsorted(codes, y_pred)
    np.add.at(counts, (ti, pi), 1)
    return ConfusionMatrix(counts=counts, classes=tuple(int(c) for c in codes))


def class_metrics(cm: ConfusionMatrix) -> list[ClassMetrics]:
    out = []
    for i, label in enumerate(cm.classes):
        tp = float(cm.counts[i, i])
        col = float(cm.counts[:, i].sum())
        row = float(cm.counts[i, :].sum())
        precision = tp / col if col > 0 else 0.0
        recall = tp / row if row > 0 else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
        out.append(
            ClassMetrics(
                label=label,
                precision=precision,
                recall=recall,
                f1=f1,
                support=int(row),
                precision_undefined=col == 0,
                recall_undefined=row == 0,
            )
        )
    return out


def aggregate_metrics(cm: ConfusionMatrix) -> AggregateMetrics:
    total = cm.total
    if total == 0:
        raise ValueError("cannot aggregate an empty confusion matrix")
    per_class = class_metrics(cm)
    supports = np.array([m.support for m in per_class], dtype=np.float64)
    precision = np.array([m.precision for m in per_class])
    recall = np.array([m.recall for m in per_class])
    f1 = np.array([m.f1 for m in per_class])

    return AggregateMetrics(
        accuracy=float(np.trace(cm.counts)) / total,
        macro_precision=float(precision.mean()),
        macro_recall=float(recall.mean()),
        macro_f1=float(f1.mean()),
        weighted_precision=float((supports * precision).sum() / total),
        weighted_recall=float((supports * recall).sum() / total),
        weighted_f1=float((supports * f1).sum() / total),
    )
