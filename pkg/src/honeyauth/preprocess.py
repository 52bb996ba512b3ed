"""Missing-value imputation and min-max feature scaling.

Not-detected readings become 0.0 first; scaling then maps each feature to
[0, 1] using extrema observed at fit time. Fitting and applying are kept
separate so cross-validation can fit on training folds only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import N_FEATURES, Dataset


@dataclass(frozen=True)
class ScalerParams:
    """Per-feature extrema captured at fit time."""

    min_values: np.ndarray
    max_values: np.ndarray

    def __post_init__(self) -> None:
        if np.any(self.min_values > self.max_values):
            raise ValueError("per-feature min must not exceed max")


def impute_missing(ds: Dataset) -> np.ndarray:
    """Feature matrix with every not-detected cell set to 0.0."""
    X = np.zeros((ds.n_samples, N_FEATURES), dtype=np.float64)
    for i, s in enumerate(ds.samples):
        for j, v in enumerate(s.values):
            if v is not None:
                X[i, j] = v
    return X


def fit_scaler(X: np.ndarray) -> ScalerParams:
    if X.shape[0] == 0:
        raise ValueError("cannot fit a scaler on an empty matrix")
    return ScalerParams(min_values=X.min(axis=0), max_values=X.max(axis=0))


def apply_scaler(params: ScalerParams, X: np.ndarray) -> np.ndarray:
    """Map each entry to (x - min) / (max - min).

    Constant features (max == min) map to 0.0. Values outside the fitted
    range are not clamped, so out-of-range inputs fall outside [0, 1].
    """
    span = params.max_values - params.min_values
    safe = np.where(span == 0, 1.0, span)
    out = (X - params.min_values) / safe
    return np.where(span == 0, 0.0, out)
