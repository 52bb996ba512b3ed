"""Honey adulteration detection from mineral element profiles."""

from .crossval import (
    CVReport,
    ModelSpec,
    OriginReport,
    cross_validate,
    default_spec,
    per_origin_evaluation,
)
from .dataset import (
    BotanicalOrigin,
    ClassLabel,
    Dataset,
    FoldPlan,
    MineralFeature,
    Sample,
    filter_by_origin,
    parse_csv,
    stratified_folds,
    to_csv,
    validate_schema,
)
from .importance import ImportanceVector, mdi_importance
from .metrics import (
    AggregateMetrics,
    ClassMetrics,
    ConfusionMatrix,
    aggregate_metrics,
    class_metrics,
    confusion_matrix,
)
from .preprocess import ScalerParams, apply_scaler, fit_scaler, impute_missing
from .synth import SynthConfig, generate_synthetic, preset_config

__version__ = "0.1.0"
