"""Command-line entry point.

Subcommands:
    validate    check a CSV against the schema and report violations
    evaluate    k-fold cross-validation (general or --per-origin)
    train       fit a model on a full CSV and write a model document
    predict     classify a CSV with a saved model document
    importance  train a forest and rank the mineral elements
    synth       write a synthetic dataset CSV

Exit codes: 0 success, 1 data/validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict
from pathlib import Path

from . import figures, report
from .crossval import POLICIES, cross_validate, default_spec, per_origin_evaluation
from .dataset import CLASS_TOKENS, ClassLabel, Dataset, parse_csv, to_csv, validate_schema
from .errors import HoneyAuthError
from .importance import mdi_importance
from .models import FittedModel, ForestConfig, load_model, save_model, train_forest
from .models.logistic import train_logistic
from .models.tree import train_tree
from .preprocess import apply_scaler, fit_scaler, impute_missing
from .synth import PRESETS, generate_synthetic, preset_config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="honeyauth",
        description="Honey adulteration detection from mineral element profiles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, model: bool = True) -> None:
        p.add_argument("--data", required=True, help="input CSV path")
        if model:
            p.add_argument("--model", choices=("lr", "dt", "rf"), default="rf")
        p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("validate", help="check a CSV against the schema")
    p.add_argument("--data", required=True)
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--out", help="optional path for the validation report JSON")

    p = sub.add_parser("evaluate", help="cross-validated evaluation")
    add_common(p)
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--policy", choices=POLICIES, default="fit-on-train")
    p.add_argument("--per-origin", action="store_true", help="one binary model per origin")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--out", help="directory for report files and figures")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("train", help="fit on the full dataset and save a model document")
    add_common(p)
    p.add_argument("--out", required=True, help="model document path")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("predict", help="classify a CSV with a saved model")
    p.add_argument("--model", required=True, help="model document path")
    p.add_argument("--data", required=True)
    p.add_argument("--out", help="predictions CSV path (default: stdout)")

    p = sub.add_parser("importance", help="rank mineral elements by forest importance")
    add_common(p, model=False)
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--out", help="directory for report files and figures")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("synth", help="write a synthetic dataset CSV")
    p.add_argument("--preset", choices=sorted(PRESETS), default="separable")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", required=True)

    return parser


def _load_dataset(path: str) -> Dataset:
    return parse_csv(Path(path).read_text(encoding="utf-8"))


def _cmd_validate(args) -> int:
    rep = validate_schema(_load_dataset(args.data))
    doc = report.validation_document(rep)
    if args.format == "machine":
        sys.stdout.write(report.dumps_document(doc))
    else:
        sys.stdout.write(report.render_validation_text(rep))
    if args.out:
        report.write_text(Path(args.out), report.dumps_document(doc))
    return 0 if rep.valid else 1


def _cmd_evaluate(args) -> int:
    ds = _load_dataset(args.data)
    spec = default_spec(args.model, args.seed)
    if args.per_origin:
        rep = per_origin_evaluation(ds, spec, args.folds, args.seed, args.policy, args.threads)
        doc = report.origin_document(rep)
        text = report.render_origin_text(rep)
    else:
        rep = cross_validate(ds, spec, args.folds, args.seed, args.policy, args.threads)
        doc = report.cv_document(rep)
        text = report.render_cv_text(rep)

    sys.stdout.write(report.dumps_document(doc) if args.format == "machine" else text)

    if args.out:
        out = Path(args.out)
        report.write_text(out / "report.json", report.dumps_document(doc))
        report.write_text(out / "report.txt", text)
        if args.per_origin:
            report.write_text(out / "origin_accuracy.csv", report.origin_csv(rep))
            figures.origin_bars(rep, out / "origin_accuracy.png")
        else:
            report.write_text(out / "metrics.csv", report.metrics_csv(rep))
            report.write_text(out / "confusion_matrix.csv", report.confusion_csv(rep.matrix))
            figures.confusion_heatmap(rep, out / "confusion_matrix.png")
            figures.metrics_bars(rep, out / "per_class_metrics.png")
    return 0


def _fit_full(ds: Dataset, kind: str, seed: int, threads: int) -> FittedModel:
    X_raw = impute_missing(ds)
    y = ds.labels()
    scaler = fit_scaler(X_raw)
    X = apply_scaler(scaler, X_raw)
    spec = default_spec(kind, seed)
    if kind == "lr":
        model = train_logistic(X, y, spec.config)
    elif kind == "dt":
        model = train_tree(X, y, spec.config)
    else:
        model = train_forest(X, y, spec.config, threads=threads)
    return FittedModel(kind=kind, model=model, scaler=scaler)


def _cmd_train(args) -> int:
    ds = _load_dataset(args.data)
    fitted = _fit_full(ds, args.model, args.seed, args.threads)
    save_model(fitted, args.out)
    sys.stdout.write(
        f"trained {args.model} on {ds.n_samples} samples (seed {args.seed}) -> {args.out}\n"
    )
    return 0


def _cmd_predict(args) -> int:
    fitted = load_model(args.model)
    ds = _load_dataset(args.data)
    labels = fitted.predict_dataset(ds)
    lines = ["id,predicted_class"]
    for sample, code in zip(ds.samples, labels):
        lines.append(f"{sample.id},{CLASS_TOKENS[ClassLabel(int(code))]}")
    text = "\n".join(lines) + "\n"
    if args.out:
        report.write_text(Path(args.out), text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_importance(args) -> int:
    ds = _load_dataset(args.data)
    X_raw = impute_missing(ds)
    scaler = fit_scaler(X_raw)
    X = apply_scaler(scaler, X_raw)
    cfg = ForestConfig(seed=args.seed)
    forest = train_forest(X, ds.labels(), cfg, threads=args.threads)
    iv = mdi_importance(forest)
    doc = report.importance_document(iv, {"model": "rf", **asdict(cfg)})

    if args.format == "machine":
        sys.stdout.write(report.dumps_document(doc))
    else:
        sys.stdout.write(report.render_importance_text(iv))
    if args.out:
        out = Path(args.out)
        report.write_text(out / "importance.json", report.dumps_document(doc))
        report.write_text(out / "importance.csv", report.importance_csv(iv))
        figures.importance_bars(iv, out / "importance.png")
    return 0


def _cmd_synth(args) -> int:
    ds = generate_synthetic(preset_config(args.preset), args.seed)
    report.write_text(Path(args.out), to_csv(ds))
    sys.stdout.write(
        f"wrote {ds.n_samples} samples (preset {args.preset}, seed {args.seed}) to {args.out}\n"
    )
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "evaluate": _cmd_evaluate,
    "train": _cmd_train,
    "predict": _cmd_predict,
    "importance": _cmd_importance,
    "synth": _cmd_synth,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    if getattr(args, "folds", 2) < 2:
        sys.stderr.write("error: --folds must be >= 2\n")
        parser.print_usage(sys.stderr)
        return 2
    if getattr(args, "threads", 1) < 1:
        sys.stderr.write("error: --threads must be >= 1\n")
        parser.print_usage(sys.stderr)
        return 2

    try:
        return _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: file not found: {exc.filename}\n")
        return 1
    except (HoneyAuthError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
