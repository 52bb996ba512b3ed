"""CART-style classification tree with Gini impurity.

Split search is exhaustive over midpoints between consecutive distinct
feature values. All tie-breaking is deterministic: equally good splits go
to the lower feature index, then the lower threshold; leaf majority ties
go to the lowest class code. Routing sends ``value <= threshold`` left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass(frozen=True)
class TreeConfig:
    max_depth: int | None = None  # None grows to purity
    min_samples_split: int = 2
    mtry: int | None = None  # candidate features per split; None = all
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be >= 0")
        if self.min_samples_split < 2:
            raise ValueError("min_samples_split must be >= 2")
        if self.mtry is not None and self.mtry < 1:
            raise ValueError("mtry must be >= 1")


@dataclass
class TreeNode:
    """Internal node when left/right are set; leaf otherwise.

    ``counts`` are per-class training sample counts at the node, indexed in
    the model's class order.
    """

    counts: np.ndarray
    feature: int = -1
    threshold: float = 0.0
    left: Optional["TreeNode"] = None
    right: Optional["TreeNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None


@dataclass
class TreeModel:
    root: TreeNode
    classes: tuple[int, ...]  # ascending class codes seen during training
    n_features: int
    config: TreeConfig


@dataclass(frozen=True)
class SplitDecision:
    feature: int
    threshold: float
    impurity: float  # sample-weighted mean child Gini


def gini_impurity(counts) -> float:
    """1 - sum((count_c / total)^2); total must be positive."""
    arr = np.asarray(counts, dtype=np.float64)
    total = arr.sum()
    if total <= 0:
        raise ValueError("class counts must not be all zero")
    p = arr / total
    return float(1.0 - (p**2).sum())


def _best_split_encoded(
    X: np.ndarray,
    y_idx: np.ndarray,
    n_classes: int,
    candidates: np.ndarray,
) -> SplitDecision | None:
    n = y_idx.size
    if n < 2:
        return None
    if np.count_nonzero(np.bincount(y_idx, minlength=n_classes)) <= 1:
        return None  # pure node

    best: SplitDecision | None = None
    for f in candidates:
        col = X[:, f]
        order = np.argsort(col, kind="stable")
        v = col[order]
        cut = np.nonzero(v[:-1] < v[1:])[0]
        if cut.size == 0:
            continue
        onehot = np.zeros((n, n_classes), dtype=np.float64)
        onehot[np.arange(n), y_idx[order]] = 1.0
        cum = onehot.cumsum(axis=0)
        left = cum[cut]
        right = cum[-1] - left
        n_left = (cut + 1).astype(np.float64)
        n_right = n - n_left
        g_left = 1.0 - ((left / n_left[:, None]) ** 2).sum(axis=1)
        g_right = 1.0 - ((right / n_right[:, None]) ** 2).sum(axis=1)
        weighted = (n_left * g_left + n_right * g_right) / n
        j = int(np.argmin(weighted))  # first minimum = lowest threshold
        if best is None or weighted[j] < best.impurity:
            threshold = float((v[cut[j]] + v[cut[j] + 1]) / 2.0)
            best = SplitDecision(int(f), threshold, float(weighted[j]))

    return best


def best_split(X: np.ndarray, y: np.ndarray, candidates=None) -> SplitDecision | None:
    """Best threshold split over the candidate features.

    Returns None when the node is pure or no candidate feature admits a
    threshold. Zero-gain splits on impure nodes are allowed; concavity of
    Gini keeps the weighted child impurity <= the parent impurity.
    """
    classes, y_idx = np.unique(y, return_inverse=True)
    if candidates is None:
        candidates = np.arange(X.shape[1])
    return _best_split_encoded(X, y_idx, classes.size, np.sort(np.asarray(candidates)))


def _grow(
    X: np.ndarray,
    y_idx: np.ndarray,
    n_classes: int,
    cfg: TreeConfig,
    rng: np.random.Generator,
    depth: int,
) -> TreeNode:
    counts = np.bincount(y_idx, minlength=n_classes)
    node = TreeNode(counts=counts)

    if np.count_nonzero(counts) <= 1:
        return node
    if cfg.max_depth is not None and depth >= cfg.max_depth:
        return node
    if y_idx.size < cfg.min_samples_split:
        return node

    n_features = X.shape[1]
    if cfg.mtry is not None and cfg.mtry < n_features:
        # RNG draws happen in node-visit (preorder) order for determinism.
        candidates = np.sort(rng.choice(n_features, size=cfg.mtry, replace=False))
    else:
        candidates = np.arange(n_features)

    split = _best_split_encoded(X, y_idx, n_classes, candidates)
    if split is None:
        return node

    mask = X[:, split.feature] <= split.threshold
    node.feature = split.feature
    node.threshold = split.threshold
    node.left = _grow(X[mask], y_idx[mask], n_classes, cfg, rng, depth + 1)
    node.right = _grow(X[~mask], y_idx[~mask], n_classes, cfg, rng, depth + 1)
    return node


def _train_with_rng(
    X: np.ndarray, y: np.ndarray, cfg: TreeConfig, rng: np.random.Generator
) -> TreeModel:
    if X.shape[0] == 0:
        raise ValueError("cannot train a tree on an empty matrix")
    if cfg.mtry is not None and cfg.mtry > X.shape[1]:
        raise ValueError(f"mtry={cfg.mtry} exceeds feature count {X.shape[1]}")
    classes, y_idx = np.unique(y, return_inverse=True)
    root = _grow(X, y_idx, classes.size, cfg, rng, depth=0)
    return TreeModel(
        root=root,
        classes=tuple(int(c) for c in classes),
        n_features=X.shape[1],
        config=cfg,
    )


def train_tree(X: np.ndarray, y: np.ndarray, cfg: TreeConfig) -> TreeModel:
    return _train_with_rng(X, y, cfg, np.random.default_rng(cfg.rng_seed))


def predict_tree(model: TreeModel, X: np.ndarray) -> np.ndarray:
    """Class codes for each row; boundary values route left."""
    if X.ndim != 2 or X.shape[1] != model.n_features:
        raise ValueError(f"expected {model.n_features} features, got {X.shape}")
    codes = np.asarray(model.classes, dtype=np.int64)
    out = np.empty(X.shape[0], dtype=np.int64)
    for i, row in enumerate(X):
        node = model.root
        while not node.is_leaf:
            node = node.left if row[node.feature] <= node.threshold else node.right
        out[i] = codes[int(np.argmax(node.counts))]
    return out
