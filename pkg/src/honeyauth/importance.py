"""Mean-decrease-in-impurity feature importance for trained forests."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .models.forest import ForestModel
from .models.tree import TreeNode, gini_impurity


@dataclass(frozen=True)
class ImportanceVector:
    """Normalized per-feature scores plus feature indices ranked best-first.

    Scores sum to 1 unless the forest never split, in which case they are
    all zero and ``degenerate`` is set.
    """

    scores: np.ndarray
    ranks: tuple[int, ...]
    degenerate: bool = False


def _credit_splits(node: TreeNode, root_total: float, acc: np.ndarray) -> None:
    if node.is_leaf:
        return
    n = float(node.counts.sum())
    n_left = float(node.left.counts.sum())
    n_right = float(node.right.counts.sum())
    children = (
        n_left * gini_impurity(node.left.counts) + n_right * gini_impurity(node.right.counts)
    ) / n
    acc[node.feature] += (gini_impurity(node.counts) - children) * (n / root_total)
    _credit_splits(node.left, root_total, acc)
    _credit_splits(node.right, root_total, acc)


def mdi_importance(model: ForestModel) -> ImportanceVector:
    """Impurity decrease per split, weighted by node sample fraction,
    averaged over trees and normalized to sum 1."""
    totals = np.zeros(model.n_features, dtype=np.float64)
    for tree in model.trees:
        acc = np.zeros(model.n_features, dtype=np.float64)
        _credit_splits(tree.root, float(tree.root.counts.sum()), acc)
        totals += acc
    totals /= len(model.trees)

    mass = totals.sum()
    degenerate = bool(mass <= 0.0)
    scores = totals if degenerate else totals / mass
    # Stable sort: equal scores rank by lower feature index.
    ranks = tuple(int(i) for i in np.argsort(-scores, kind="stable"))
    return ImportanceVector(scores=scores, ranks=ranks, degenerate=degenerate)
