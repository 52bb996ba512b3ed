"""Model documents: JSON serialization for trained classifiers.

A document bundles the classifier parameters with the scaler fitted at
training time, so a loaded model reproduces training-time preprocessing
exactly. Field names are frozen per format_version (see docs/formats.md).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from ..dataset import Dataset
from ..errors import DecodeError
from ..preprocess import ScalerParams, apply_scaler, impute_missing
from .forest import ForestConfig, ForestModel, predict_forest
from .logistic import LRConfig, LRModel, predict_logistic
from .tree import TreeConfig, TreeModel, TreeNode, predict_tree

FORMAT_VERSION = 1

MODEL_KINDS = ("lr", "dt", "rf")


@dataclass
class FittedModel:
    """A trained classifier plus the preprocessing it was trained with."""

    kind: str
    model: LRModel | TreeModel | ForestModel
    scaler: ScalerParams | None = None

    def predict_matrix(self, X: np.ndarray) -> np.ndarray:
        """Predict class codes from an already-imputed feature matrix."""
        if self.scaler is not None:
            X = apply_scaler(self.scaler, X)
        if self.kind == "lr":
            labels, _ = predict_logistic(self.model, X)
            return labels
        if self.kind == "dt":
            return predict_tree(self.model, X)
        return predict_forest(self.model, X)

    def predict_dataset(self, ds: Dataset) -> np.ndarray:
        return self.predict_matrix(impute_missing(ds))


def _node_to_doc(node: TreeNode) -> dict:
    doc: dict = {"counts": [int(c) for c in node.counts]}
    if not node.is_leaf:
        doc["feature"] = node.feature
        doc["threshold"] = node.threshold
        doc["left"] = _node_to_doc(node.left)
        doc["right"] = _node_to_doc(node.right)
    return doc


def _node_from_doc(doc: dict) -> TreeNode:
    node = TreeNode(counts=np.asarray(doc["counts"], dtype=np.int64))
    if "feature" in doc:
        node.feature = int(doc["feature"])
        node.threshold = float(doc["threshold"])
        node.left = _node_from_doc(doc["left"])
        node.right = _node_from_doc(doc["right"])
    return node


def _tree_to_doc(model: TreeModel) -> dict:
    return {
        "root": _node_to_doc(model.root),
        "classes": list(model.classes),
        "n_features": model.n_features,
    }


def _tree_from_doc(doc: dict, cfg: TreeConfig) -> TreeModel:
    return TreeModel(
        root=_node_from_doc(doc["root"]),
        classes=tuple(int(c) for c in doc["classes"]),
        n_features=int(doc["n_features"]),
        config=cfg,
    )


def serialize_model(fitted: FittedModel) -> dict:
    if fitted.kind not in MODEL_KINDS:
        raise ValueError(f"unknown model kind {fitted.kind!r}")
    scaler_doc = None
    if fitted.scaler is not None:
        scaler_doc = {
            "min": fitted.scaler.min_values.tolist(),
            "max": fitted.scaler.max_values.tolist(),
        }

    model = fitted.model
    if fitted.kind == "lr":
        config = asdict(model.config)
        parameters = {
            "weights": model.weights.tolist(),
            "bias": model.bias.tolist(),
            "classes": list(model.classes),
            "n_iters": model.n_iters,
        }
    elif fitted.kind == "dt":
        config = asdict(model.config)
        parameters = _tree_to_doc(model)
    else:
        config = asdict(model.config)
        parameters = {
            "trees": [_tree_to_doc(t) for t in model.trees],
            "tree_configs": [asdict(t.config) for t in model.trees],
            "tree_seeds": list(model.tree_seeds),
            "classes": list(model.classes),
            "train_class_counts": model.train_class_counts.tolist(),
            "n_features": model.n_features,
        }

    return {
        "format_version": FORMAT_VERSION,
        "model_kind": fitted.kind,
        "config": config,
        "scaler_params": scaler_doc,
        "parameters": parameters,
    }


def deserialize_model(doc: dict) -> FittedModel:
    try:
        version = doc["format_version"]
        if version != FORMAT_VERSION:
            raise DecodeError(
                f"unsupported format_version {version}; this build reads version {FORMAT_VERSION}"
            )
        kind = doc["model_kind"]
        if kind not in MODEL_KINDS:
            raise DecodeError(f"unknown model_kind {kind!r}")

        scaler = None
        if doc["scaler_params"] is not None:
            scaler = ScalerParams(
                min_values=np.asarray(doc["scaler_params"]["min"], dtype=np.float64),
                max_values=np.asarray(doc["scaler_params"]["max"], dtype=np.float64),
            )

        params = doc["parameters"]
        if kind == "lr":
            model = LRModel(
                weights=np.asarray(params["weights"], dtype=np.float64),
                bias=np.asarray(params["bias"], dtype=np.float64),
                classes=tuple(int(c) for c in params["classes"]),
                config=LRConfig(**doc["config"]),
                n_iters=int(params["n_iters"]),
            )
        elif kind == "dt":
            model = _tree_from_doc(params, TreeConfig(**doc["config"]))
        else:
            cfg = ForestConfig(**doc["config"])
            trees = [
                _tree_from_doc(t, TreeConfig(**tc))
                for t, tc in zip(params["trees"], params["tree_configs"])
            ]
            model = ForestModel(
                trees=trees,
                tree_seeds=tuple(int(s) for s in params["tree_seeds"]),
                classes=tuple(int(c) for c in params["classes"]),
                train_class_counts=np.asarray(params["train_class_counts"], dtype=np.int64),
                n_features=int(params["n_features"]),
                config=cfg,
            )
        return FittedModel(kind=kind, model=model, scaler=scaler)
    except DecodeError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DecodeError(f"malformed model document: {exc}") from exc


def save_model(fitted: FittedModel, path: str | Path) -> None:
    Path(path).write_text(json.dumps(serialize_model(fitted), indent=2), encoding="utf-8")


def load_model(path: str | Path) -> FittedModel:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DecodeError(f"not a valid model document: {exc}") from exc
    return deserialize_model(doc)
