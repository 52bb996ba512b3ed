"""Report documents and delimited output.

Machine documents are plain dicts with a fixed field order, serialized as
JSON. They exclude wall-clock timing so a rerun with identical inputs
produces byte-identical files; timing appears in the human rendering only.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

from .crossval import CVReport, OriginReport
from .dataset import CLASS_TOKENS, MINERAL_NAMES, ORIGIN_TOKENS, ClassLabel, ValidationReport
from .importance import ImportanceVector
from .metrics import ConfusionMatrix


def _class_token(code: int) -> str:
    return CLASS_TOKENS[ClassLabel(code)]


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# machine documents


def cv_document(report: CVReport) -> dict:
    return {
        "report_kind": "cross_validation",
        "model": report.model_kind,
        "config": asdict(report.config),
        "k": report.k,
        "seed": report.seed,
        "policy": report.policy,
        "n_samples": report.n_samples,
        "classes": [_class_token(c) for c in report.classes],
        "confusion_matrix": report.matrix.counts.tolist(),
        "per_class": [
            {
                "class": _class_token(m.label),
                "precision": m.precision,
                "recall": m.recall,
                "f1": m.f1,
                "support": m.support,
                "precision_undefined": m.precision_undefined,
                "recall_undefined": m.recall_undefined,
            }
            for m in report.per_class
        ],
        "averages": {
            "macro": {
                "precision": report.aggregates.macro_precision,
                "recall": report.aggregates.macro_recall,
                "f1": report.aggregates.macro_f1,
            },
            "weighted": {
                "precision": report.aggregates.weighted_precision,
                "recall": report.aggregates.weighted_recall,
                "f1": report.aggregates.weighted_f1,
            },
        },
        "accuracy": report.aggregates.accuracy,
    }


def origin_document(report: OriginReport) -> dict:
    origins = {
        ORIGIN_TOKENS[origin]: cv_document(cv) for origin, cv in report.reports.items()
    }
    return {
        "report_kind": "per_origin",
        "origins": origins,
        "average_accuracy": report.average_accuracy,
        "warnings": list(report.warnings),
    }


def validation_document(report: ValidationReport) -> dict:
    return {
        "report_kind": "validation",
        "n_samples": report.n_samples,
        "valid": report.valid,
        "class_counts": {CLASS_TOKENS[c]: n for c, n in report.class_counts.items()},
        "nd_rates": dict(report.nd_rates),
        "origin_counts": {ORIGIN_TOKENS[o]: n for o, n in report.origin_counts.items()},
        "violations": list(report.violations),
    }


def importance_document(iv: ImportanceVector, config: dict) -> dict:
    return {
        "report_kind": "importance",
        "config": config,
        "scores": {MINERAL_NAMES[i]: float(s) for i, s in enumerate(iv.scores)},
        "ranking": [MINERAL_NAMES[i] for i in iv.ranks],
        "degenerate": iv.degenerate,
    }


# ---------------------------------------------------------------------------
# human rendering


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*headers), fmt.format(*["-" * w for w in widths])]
    lines += [fmt.format(*row) for row in rows]
    return "\n".join(lines)


def _confusion_table(cm: ConfusionMatrix) -> str:
    names = [_class_token(c) for c in cm.classes]
    headers = ["true \\ predicted"] + names
    rows = [
        [names[i]] + [str(int(v)) for v in cm.counts[i]] for i in range(len(names))
    ]
    return _table(headers, rows)


def render_cv_text(report: CVReport) -> str:
    lines = [
        "cross-validation report",
        f"model={report.model_kind} k={report.k} seed={report.seed} "
        f"policy={report.policy} samples={report.n_samples}",
        f"wall clock: {report.wall_clock_s:.2f} s",
        "",
        _confusion_table(report.matrix),
        "",
        _table(
            ["class", "precision", "recall", "f1", "support"],
            [
                [
                    _class_token(m.label),
                    f"{m.precision:.4f}",
                    f"{m.recall:.4f}",
                    f"{m.f1:.4f}",
                    str(m.support),
                ]
                for m in report.per_class
            ],
        ),
        "",
        f"accuracy: {report.aggregates.accuracy:.4f}",
        f"macro    precision/recall/f1: {report.aggregates.macro_precision:.4f} "
        f"{report.aggregates.macro_recall:.4f} {report.aggregates.macro_f1:.4f}",
        f"weighted precision/recall/f1: {report.aggregates.weighted_precision:.4f} "
        f"{report.aggregates.weighted_recall:.4f} {report.aggregates.weighted_f1:.4f}",
    ]
    return "\n".join(lines) + "\n"


def render_origin_text(report: OriginReport) -> str:
    rows = [
        [ORIGIN_TOKENS[o], f"{cv.accuracy:.4f}", str(cv.n_samples)]
        for o, cv in report.reports.items()
    ]
    lines = [
        "per-origin adulteration detection (authentic vs adulterated)",
        "",
        _table(["origin", "accuracy", "samples"], rows),
        "",
        f"average accuracy: {report.average_accuracy:.4f}",
    ]
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def render_validation_text(report: ValidationReport) -> str:
    lines = [
        f"samples: {report.n_samples}",
        "class counts: "
        + ", ".join(f"{CLASS_TOKENS[c]}={n}" for c, n in report.class_counts.items()),
        "origins: "
        + ", ".join(
            f"{ORIGIN_TOKENS[o]}={n}" for o, n in report.origin_counts.items() if n
        ),
        "nd rates: "
        + ", ".join(f"{f}={r:.3f}" for f, r in report.nd_rates.items() if r > 0),
    ]
    if report.valid:
        lines.append("valid: yes")
    else:
        lines.append(f"valid: no ({len(report.violations)} violations)")
        lines += [f"  - {v}" for v in report.violations]
    return "\n".join(lines) + "\n"


def render_importance_text(iv: ImportanceVector) -> str:
    rows = [
        [str(rank), MINERAL_NAMES[feat], f"{iv.scores[feat]:.4f}"]
        for rank, feat in enumerate(iv.ranks, start=1)
    ]
    text = _table(["rank", "feature", "score"], rows)
    if iv.degenerate:
        text += "\n(degenerate: forest contains no splits)"
    return text + "\n"


# ---------------------------------------------------------------------------
# delimited files


def metrics_csv(report: CVReport) -> str:
    lines = ["class,precision,recall,f1,support"]
    for m in report.per_class:
        lines.append(
            f"{_class_token(m.label)},{m.precision!r},{m.recall!r},{m.f1!r},{m.support}"
        )
    return "\n".join(lines) + "\n"


def confusion_csv(cm: ConfusionMatrix) -> str:
    names = [_class_token(c) for c in cm.classes]
    lines = ["true_class," + ",".join(names)]
    for i, name in enumerate(names):
        lines.append(name + "," + ",".join(str(int(v)) for v in cm.counts[i]))
    return "\n".join(lines) + "\n"


def origin_csv(report: OriginReport) -> str:
    lines = ["origin,accuracy,samples"]
    for o, cv in report.reports.items():
        lines.append(f"{ORIGIN_TOKENS[o]},{cv.accuracy!r},{cv.n_samples}")
    return "\n".join(lines) + "\n"


def importance_csv(iv: ImportanceVector) -> str:
    lines = ["rank,feature,score"]
    for rank, feat in enumerate(iv.ranks, start=1):
        lines.append(f"{rank},{MINERAL_NAMES[feat]},{iv.scores[feat]!r}")
    return "\n".join(lines) + "\n"


def write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
