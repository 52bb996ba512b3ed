from .forest import ForestConfig, ForestModel, predict_forest, train_forest
from .logistic import (
    LRConfig,
    LRModel,
    lr_loss_gradient,
    predict_logistic,
    train_logistic,
)
from .persist import (
    FORMAT_VERSION,
    FittedModel,
    deserialize_model,
    load_model,
    save_model,
    serialize_model,
)
from .tree import (
    SplitDecision,
    TreeConfig,
    TreeModel,
    TreeNode,
    best_split,
    gini_impurity,
    predict_tree,
    train_tree,
)

__all__ = [
    "ForestConfig",
    "ForestModel",
    "predict_forest",
    "train_forest",
    "LRConfig",
    "LRModel",
    "lr_loss_gradient",
    "predict_logistic",
    "train_logistic",
    "FORMAT_VERSION",
    "FittedModel",
    "deserialize_model",
    "load_model",
    "save_model",
    "serialize_model",
    "SplitDecision",
    "TreeConfig",
    "TreeModel",
    "TreeNode",
    "best_split",
    "gini_impurity",
    "predict_tree",
    "train_tree",
]
