"""Matplotlib renderings written next to the delimited report files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .crossval import CVReport, OriginReport
from .dataset import CLASS_TOKENS, MINERAL_NAMES, ORIGIN_TOKENS, ClassLabel
from .importance import ImportanceVector

_DPI = 150


def _save(fig, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def confusion_heatmap(report: CVReport, path: Path) -> None:
    counts = report.matrix.counts
    names = [CLASS_TOKENS[ClassLabel(c)] for c in report.classes]
    fig, ax = plt.subplots(figsize=(4.5, 4))
    im = ax.imshow(counts, cmap="Blues")
    ax.set_xticks(range(len(names)), names, rotation=30, ha="right")
    ax.set_yticks(range(len(names)), names)
    ax.set_xlabel("predicted")
    ax.set_ylabel("true")
    ax.set_title(f"{report.model_kind} confusion matrix ({report.k}-fold)")
    threshold = counts.max() / 2 if counts.max() else 0
    for i in range(counts.shape[0]):
        for j in range(counts.shape[1]):
            ax.text(
                j,
                i,
                str(int(counts[i, j])),
                ha="center",
                va="center",
                color="white" if counts[i, j] > threshold else "black",
            )
    fig.colorbar(im, ax=ax, shrink=0.8)
    _save(fig, path)


def metrics_bars(report: CVReport, path: Path) -> None:
    names = [CLASS_TOKENS[ClassLabel(m.label)] for m in report.per_class]
    x = np.arange(len(names))
    width = 0.27
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(x - width, [m.precision for m in report.per_class], width, label="precision")
    ax.bar(x, [m.recall for m in report.per_class], width, label="recall")
    ax.bar(x + width, [m.f1 for m in report.per_class], width, label="f1")
    ax.set_xticks(x, names)
    ax.set_ylim(0, 1.05)
    ax.set_title(f"{report.model_kind} per-class metrics (accuracy {report.accuracy:.3f})")
    ax.legend(loc="lower right")
    _save(fig, path)


def origin_bars(report: OriginReport, path: Path) -> None:
    names = [ORIGIN_TOKENS[o] for o in report.reports]
    accs = [cv.accuracy for cv in report.reports.values()]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(np.arange(len(names)), accs, color="tab:olive")
    ax.axhline(report.average_accuracy, ls="--", c="gray", lw=1, label="average")
    ax.set_xticks(np.arange(len(names)), names)
    ax.set_ylim(0, 1.05)
    ax.set_ylabel("cross-validation accuracy")
    ax.set_title("per-origin adulteration detection")
    ax.legend(loc="lower right")
    _save(fig, path)


def importance_bars(iv: ImportanceVector, path: Path) -> None:
    names = [MINERAL_NAMES[i] for i in iv.ranks]
    scores = [float(iv.scores[i]) for i in iv.ranks]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(np.arange(len(names)), scores, color="tab:blue")
    ax.set_xticks(np.arange(len(names)), names)
    ax.set_ylabel("mean decrease in impurity")
    ax.set_title("mineral element importance")
    _save(fig, path)
