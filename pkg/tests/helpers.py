"""Shared test fixtures: dataset builders and independent oracles.

The oracles here are deliberately naive pure-Python implementations used
to cross-check the package's vectorized code paths.
"""

from __future__ import annotations

import numpy as np

from honeyauth.dataset import N_FEATURES, BotanicalOrigin, ClassLabel, Dataset, Sample
from honeyauth.models import lr_loss_gradient


def dataset_from_matrix(X, labels, origins=None, ids=None) -> Dataset:
    """Wrap an (n, 12) matrix into a Dataset; None entries become ND."""
    X = np.asarray(X, dtype=object)
    n = X.shape[0]
    if X.shape[1] != N_FEATURES:
        raise ValueError("matrix must have 12 columns")
    samples = []
    for i in range(n):
        label = ClassLabel(int(labels[i]))
        if origins is not None:
            origin = origins[i]
        elif label is ClassLabel.SYRUP:
            origin = BotanicalOrigin.NONE
        else:
            origin = BotanicalOrigin.ACACIA
        values = tuple(None if v is None else float(v) for v in X[i])
        samples.append(
            Sample(
                id=ids[i] if ids else f"t{i:04d}",
                origin=origin,
                label=label,
                values=values,
            )
        )
    return Dataset(tuple(samples))


def pad_features(X, width=N_FEATURES, fill=0.0):
    """Right-pad a narrow feature matrix with a constant filler column."""
    X = np.asarray(X, dtype=np.float64)
    out = np.full((X.shape[0], width), fill, dtype=np.float64)
    out[:, : X.shape[1]] = X
    return out


def random_labeled_matrix(rng, n, n_features, n_classes, value_range=6):
    """Small integer-valued dataset; all classes guaranteed present."""
    X = rng.integers(0, value_range, size=(n, n_features)).astype(np.float64)
    y = rng.integers(0, n_classes, size=n)
    y[:n_classes] = np.arange(n_classes)  # force every class to appear
    return X, y


# ---------------------------------------------------------------------------
# brute-force CART oracle (pure Python, mirrors the documented split rules)


def oracle_gini(counts):
    total = sum(counts)
    return 1.0 - sum((c / total) ** 2 for c in counts)


def _oracle_counts(labels, n_classes):
    counts = [0] * n_classes
    for c in labels:
        counts[c] += 1
    return counts


def oracle_best_split(rows, labels, n_classes):
    """Exhaustive scan over every feature and every midpoint threshold.

    None only for pure nodes or when no feature has two distinct values;
    zero-gain splits of impure nodes are returned, like the library does.
    """
    n = len(rows)
    if n < 2:
        return None
    if sum(1 for c in _oracle_counts(labels, n_classes) if c > 0) <= 1:
        return None
    best = None
    for f in range(len(rows[0])):
        values = sorted(set(r[f] for r in rows))
        for lo, hi in zip(values, values[1:]):
            thr = (lo + hi) / 2.0
            left = [i for i in range(n) if rows[i][f] <= thr]
            right = [i for i in range(n) if rows[i][f] > thr]
            g_left = oracle_gini(_oracle_counts([labels[i] for i in left], n_classes))
            g_right = oracle_gini(_oracle_counts([labels[i] for i in right], n_classes))
            weighted = (len(left) * g_left + len(right) * g_right) / n
            if best is None or weighted < best[0]:
                best = (weighted, f, thr)
    return best


class OracleTree:
    """Unpruned greedy CART grown by exhaustive search; no feature sampling."""

    def __init__(self, rows, labels, n_classes):
        self.n_classes = n_classes
        self.root = self._grow(list(rows), list(labels))

    def _grow(self, rows, labels):
        counts = _oracle_counts(labels, self.n_classes)
        majority = max(range(self.n_classes), key=lambda c: counts[c])  # tie: low code
        if sum(1 for c in counts if c > 0) <= 1:
            return ("leaf", majority)
        split = oracle_best_split(rows, labels, self.n_classes)
        if split is None:
            return ("leaf", majority)
        _, f, thr = split
        left_idx = [i for i in range(len(rows)) if rows[i][f] <= thr]
        right_idx = [i for i in range(len(rows)) if rows[i][f] > thr]
        left = self._grow([rows[i] for i in left_idx], [labels[i] for i in left_idx])
        right = self._grow([rows[i] for i in right_idx], [labels[i] for i in right_idx])
        return ("split", f, thr, left, right)

    def predict_row(self, row):
        node = self.root
        while node[0] == "split":
            _, f, thr, left, right = node
            node = left if row[f] <= thr else right
        return node[1]

    def predict(self, rows):
        return [self.predict_row(r) for r in rows]


# ---------------------------------------------------------------------------
# finite-difference gradient oracle


def finite_difference_gradients(W, b, X, y, l2_lambda, h=1e-5):
    """Central differences of the training loss wrt every W and b entry."""

    def loss_at(Wv, bv):
        loss, _, _ = lr_loss_gradient(Wv, bv, X, y, l2_lambda)
        return loss

    grad_W = np.zeros_like(W)
    for i in range(W.shape[0]):
        for j in range(W.shape[1]):
            up = W.copy()
            down = W.copy()
            up[i, j] += h
            down[i, j] -= h
            grad_W[i, j] = (loss_at(up, b) - loss_at(down, b)) / (2 * h)
    grad_b = np.zeros_like(b)
    for i in range(b.size):
        up = b.copy()
        down = b.copy()
        up[i] += h
        down[i] -= h
        grad_b[i] = (loss_at(W, up) - loss_at(W, down)) / (2 * h)
    return grad_W, grad_b
