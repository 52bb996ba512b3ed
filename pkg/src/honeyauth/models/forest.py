"""Bagged ensemble of classification trees with majority voting.

Each tree gets its own RNG stream keyed by (master seed, tree index), so
the ensemble is reproducible bit-for-bit no matter how many worker threads
train it. Vote ties resolve to the class with the larger training count,
then to the lower class code.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .tree import TreeConfig, TreeModel, _train_with_rng, predict_tree


@dataclass(frozen=True)
class ForestConfig:
    n_trees: int = 100
    mtry: int | None = None  # None = floor(sqrt(n_features))
    bootstrap: bool = True  # resample n rows with replacement per tree
    max_depth: int | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n_trees < 1:
            raise ValueError("n_trees must be >= 1")
        if self.mtry is not None and self.mtry < 1:
            raise ValueError("mtry must be >= 1")


@dataclass
class ForestModel:
    trees: list[TreeModel]
    tree_seeds: tuple[int, ...]
    classes: tuple[int, ...]  # ascending class codes over the training set
    train_class_counts: np.ndarray  # per-class counts, used for vote ties
    n_features: int
    config: ForestConfig


def _tree_seeds(master_seed: int, n_trees: int) -> tuple[int, ...]:
    # One 64-bit word per tree from the master SeedSequence stream.
    words = np.random.SeedSequence(master_seed).generate_state(n_trees, dtype=np.uint64)
    return tuple(int(w) for w in words)


def _fit_one(
    X: np.ndarray, y: np.ndarray, cfg: TreeConfig, bootstrap: bool, tree_seed: int
) -> TreeModel:
    rng = np.random.default_rng(tree_seed)
    if bootstrap:
        idx = rng.integers(0, X.shape[0], size=X.shape[0])
        return _train_with_rng(X[idx], y[idx], cfg, rng)
    return _train_with_rng(X, y, cfg, rng)


def train_forest(
    X: np.ndarray, y: np.ndarray, cfg: ForestConfig, threads: int = 1
) -> ForestModel:
    if X.shape[0] == 0:
        raise ValueError("cannot train a forest on an empty matrix")
    mtry = cfg.mtry if cfg.mtry is not None else max(1, int(math.isqrt(X.shape[1])))
    if mtry > X.shape[1]:
        raise ValueError(f"mtry={mtry} exceeds feature count {X.shape[1]}")
    tree_cfg = TreeConfig(max_depth=cfg.max_depth, mtry=mtry)

    seeds = _tree_seeds(cfg.seed, cfg.n_trees)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            trees = list(
                pool.map(lambda s: _fit_one(X, y, tree_cfg, cfg.bootstrap, s), seeds)
            )
    else:
        trees = [_fit_one(X, y, tree_cfg, cfg.bootstrap, s) for s in seeds]

    classes = np.unique(y)
    counts = np.array([(y == c).sum() for c in classes], dtype=np.int64)
    return ForestModel(
        trees=trees,
        tree_seeds=seeds,
        classes=tuple(int(c) for c in classes),
        train_class_counts=counts,
        n_features=X.shape[1],
        config=cfg,
    )


def predict_forest(model: ForestModel, X: np.ndarray) -> np.ndarray:
    """Plurality vote over trees, returning class codes per row."""
    if X.ndim != 2 or X.shape[1] != model.n_features:
        raise ValueError(f"expected {model.n_features} features, got {X.shape}")
    codes = np.asarray(model.classes, dtype=np.int64)
    votes = np.zeros((X.shape[0], codes.size), dtype=np.int64)
    rows = np.arange(X.shape[0])
    for tree in model.trees:
        pred = predict_tree(tree, X)
        votes[rows, np.searchsorted(codes, pred)] += 1
    # Lexicographic argmax over (votes, training count); first max wins,
    # which lands remaining ties on the lowest class code.
    score = votes * (int(model.train_class_counts.max()) + 1) + model.train_class_counts
    return codes[np.argmax(score, axis=1)]
