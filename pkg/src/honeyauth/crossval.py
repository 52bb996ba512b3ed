"""Cross-validated evaluation: general three-class runs and per-origin
binary (authentic vs adulterated) runs.

Held-out confusion matrices are pooled across folds before any metric is
computed, so a k-fold run yields one confusion matrix covering every
sample exactly once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .dataset import (
    HONEY_ORIGINS,
    BotanicalOrigin,
    Dataset,
    filter_by_origin,
    stratified_folds,
)
from .errors import TrainingError
from .metrics import (
    AggregateMetrics,
    ClassMetrics,
    ConfusionMatrix,
    aggregate_metrics,
    class_metrics,
    confusion_matrix,
)
from .models import (
    ForestConfig,
    LRConfig,
    TreeConfig,
    predict_forest,
    predict_logistic,
    predict_tree,
    train_forest,
    train_logistic,
    train_tree,
)
from .preprocess import apply_scaler, fit_scaler, impute_missing

POLICIES = ("fit-on-train", "fit-on-all")


@dataclass(frozen=True)
class ModelSpec:
    kind: str  # "lr" | "dt" | "rf"
    config: LRConfig | TreeConfig | ForestConfig

    def __post_init__(self) -> None:
        expected = {"lr": LRConfig, "dt": TreeConfig, "rf": ForestConfig}
        if self.kind not in expected:
            raise ValueError(f"unknown model kind {self.kind!r}")
        if not isinstance(self.config, expected[self.kind]):
            raise ValueError(f"config type does not match model kind {self.kind!r}")


def default_spec(kind: str, seed: int = 0) -> ModelSpec:
    if kind == "lr":
        return ModelSpec("lr", LRConfig())
    if kind == "dt":
        return ModelSpec("dt", TreeConfig(rng_seed=seed))
    if kind == "rf":
        return ModelSpec("rf", ForestConfig(seed=seed))
    raise ValueError(f"unknown model kind {kind!r}")


@dataclass
class CVReport:
    model_kind: str
    config: LRConfig | TreeConfig | ForestConfig
    k: int
    seed: int
    policy: str
    classes: tuple[int, ...]
    matrix: ConfusionMatrix
    per_class: list[ClassMetrics]
    aggregates: AggregateMetrics
    n_samples: int
    wall_clock_s: float

    @property
    def accuracy(self) -> float:
        return self.aggregates.accuracy


@dataclass
class OriginReport:
    reports: dict[BotanicalOrigin, CVReport]
    average_accuracy: float
    warnings: list[str] = field(default_factory=list)


def _train_one(spec: ModelSpec, X: np.ndarray, y: np.ndarray, threads: int):
    if spec.kind == "lr":
        return train_logistic(X, y, spec.config)
    if spec.kind == "dt":
        return train_tree(X, y, spec.config)
    return train_forest(X, y, spec.config, threads=threads)


def _predict_one(spec: ModelSpec, model, X: np.ndarray) -> np.ndarray:
    if spec.kind == "lr":
        labels, _ = predict_logistic(model, X)
        return labels
    if spec.kind == "dt":
        return predict_tree(model, X)
    return predict_forest(model, X)


def cross_validate(
    ds: Dataset,
    spec: ModelSpec,
    k: int,
    seed: int,
    policy: str = "fit-on-train",
    threads: int = 1,
) -> CVReport:
    """k-fold cross-validation with pooled held-out confusion matrix.

    policy "fit-on-train" fits the scaler on each training split only
    (leakage-safe default); "fit-on-all" fits it once on the full dataset
    before splitting, reproducing a preprocess-then-evaluate pipeline.
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown preprocessing policy {policy!r}")
    started = time.perf_counter()

    X_raw = impute_missing(ds)
    y = ds.labels()
    classes = tuple(int(c) for c in np.unique(y))
    if len(classes) < 2:
        raise ValueError("cross-validation needs at least 2 classes in the dataset")
    plan = stratified_folds(ds, k, seed)
    assignments = np.asarray(plan.assignments)

    if policy == "fit-on-all":
        X_all = apply_scaler(fit_scaler(X_raw), X_raw)

    y_true_parts = []
    y_pred_parts = []
    for fold in range(k):
        test_mask = assignments == fold
        if not test_mask.any():
            continue  # possible when every class has fewer samples than k
        train_mask = ~test_mask

        missing = [c for c in classes if not np.any(y[train_mask] == c)]
        if missing:
            raise TrainingError(
                f"fold {fold}: class codes {missing} absent from the training split"
            )

        if policy == "fit-on-train":
            scaler = fit_scaler(X_raw[train_mask])
            X_train = apply_scaler(scaler, X_raw[train_mask])
            X_test = apply_scaler(scaler, X_raw[test_mask])
        else:
            X_train = X_all[train_mask]
            X_test = X_all[test_mask]

        model = _train_one(spec, X_train, y[train_mask], threads)
        y_true_parts.append(y[test_mask])
        y_pred_parts.append(_predict_one(spec, model, X_test))

    cm = confusion_matrix(
        np.concatenate(y_true_parts), np.concatenate(y_pred_parts), classes
    )
    per_class = class_metrics(cm)
    aggregates = aggregate_metrics(cm)
    # Identity check: weighted recall is accuracy by construction.
    assert abs(aggregates.weighted_recall - aggregates.accuracy) < 1e-12

    return CVReport(
        model_kind=spec.kind,
        config=spec.config,
        k=k,
        seed=seed,
        policy=policy,
        classes=classes,
        matrix=cm,
        per_class=per_class,
        aggregates=aggregates,
        n_samples=ds.n_samples,
        wall_clock_s=time.perf_counter() - started,
    )


def per_origin_evaluation(
    ds: Dataset,
    spec: ModelSpec,
    k: int,
    seed: int,
    policy: str = "fit-on-train",
    threads: int = 1,
) -> OriginReport:
    """One binary authentic-vs-adulterated run per botanical origin present.

    Origins whose subset cannot be cross-validated (single class, or fewer
    samples than folds) are skipped with a warning entry.
    """
    reports: dict[BotanicalOrigin, CVReport] = {}
    warnings: list[str] = []
    for origin in HONEY_ORIGINS:
        sub = filter_by_origin(ds, origin)
        if sub.n_samples == 0:
            continue
        present = {c for c, n in sub.class_counts.items() if n > 0}
        if len(present) < 2:
            warnings.append(f"{origin.name.lower()}: only one class present, skipped")
            continue
        if sub.n_samples < k:
            warnings.append(
                f"{origin.name.lower()}: {sub.n_samples} samples is fewer than {k} folds, skipped"
            )
            continue
        reports[origin] = cross_validate(sub, spec, k, seed, policy, threads)

    if not reports:
        raise ValueError("no origin subset was evaluable")
    average = float(np.mean([r.accuracy for r in reports.values()]))
    return OriginReport(reports=reports, average_accuracy=average, warnings=warnings)
