"""Multinomial (softmax) logistic regression.

Trained with full-batch gradient descent from zero initialization, so the
fit is fully deterministic. The L2 penalty applies to the weight matrix
only, never the biases.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LRConfig:
    learning_rate: float = 0.1
    max_iters: int = 5000
    tolerance: float = 1e-6
    l2_lambda: float = 1e-4

    def __post_init__(self) -> None:
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be positive")
        if self.max_iters <= 0:
            raise ValueError("max_iters must be positive")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.l2_lambda < 0:
            raise ValueError("l2_lambda must be >= 0")


@dataclass
class LRModel:
    weights: np.ndarray  # (n_classes, n_features)
    bias: np.ndarray  # (n_classes,)
    classes: tuple[int, ...]  # ascending class codes; row order of weights
    config: LRConfig
    n_iters: int = 0


def _softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=1, keepdims=True)
    ez = np.exp(shifted)
    return ez / ez.sum(axis=1, keepdims=True)


def lr_loss_gradient(
    W: np.ndarray,
    b: np.ndarray,
    X: np.ndarray,
    y: np.ndarray,
    l2_lambda: float,
) -> tuple[float, np.ndarray, np.ndarray]:
    """Mean cross-entropy loss plus L2 penalty, with its analytic gradient.

    ``y`` holds row indices into W (0..n_classes-1). Returns
    (loss, grad_W, grad_b) with gradients matching the shapes of W and b.
    """
    n, n_features = X.shape
    n_classes = W.shape[0]
    if W.shape[1] != n_features or b.shape != (n_classes,):
        raise ValueError(
            f"shape mismatch: W{W.shape}, b{b.shape} vs X with {n_features} features"
        )
    if y.shape != (n,) or (n and (y.min() < 0 or y.max() >= n_classes)):
        raise ValueError("labels must index rows of W and match X row count")

    logits = X @ W.T + b
    shifted = logits - logits.max(axis=1, keepdims=True)
    log_probs = shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))
    loss = -log_probs[np.arange(n), y].mean() + 0.5 * l2_lambda * float((W**2).sum())

    G = np.exp(log_probs)
    G[np.arange(n), y] -= 1.0
    G /= n
    grad_W = G.T @ X + l2_lambda * W
    grad_b = G.sum(axis=0)
    return float(loss), grad_W, grad_b


def train_logistic(X: np.ndarray, y: np.ndarray, cfg: LRConfig) -> LRModel:
    """Gradient descent until max_iters or the gradient infinity-norm drops
    below cfg.tolerance."""
    classes = np.unique(y)
    if classes.size < 2:
        raise ValueError("training labels must contain at least 2 classes")
    y_idx = np.searchsorted(classes, y)

    W = np.zeros((classes.size, X.shape[1]), dtype=np.float64)
    b = np.zeros(classes.size, dtype=np.float64)
    iters = 0
    for iters in range(1, cfg.max_iters + 1):
        _, grad_W, grad_b = lr_loss_gradient(W, b, X, y_idx, cfg.l2_lambda)
        grad_norm = max(np.abs(grad_W).max(), np.abs(grad_b).max())
        if grad_norm < cfg.tolerance:
            break
        W -= cfg.learning_rate * grad_W
        b -= cfg.learning_rate * grad_b
    return LRModel(
        weights=W,
        bias=b,
        classes=tuple(int(c) for c in classes),
        config=cfg,
        n_iters=iters,
    )


def predict_logistic(model: LRModel, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Predicted class codes and per-class probabilities (rows sum to 1).

    Probability ties resolve to the lowest class code.
    """
    if X.shape[1] != model.weights.shape[1]:
        raise ValueError(
            f"expected {model.weights.shape[1]} features, got {X.shape[1]}"
        )
    probs = _softmax(X @ model.weights.T + model.bias)
    codes = np.asarray(model.classes, dtype=np.int64)
    labels = codes[np.argmax(probs, axis=1)]
    return labels, probs
