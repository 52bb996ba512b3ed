"""Sample schema, CSV ingestion, validation, fold plans and origin subsets.

The on-disk format is a plain UTF-8 CSV with the fixed header

    id,origin,class,Al,B,Ba,Ca,Fe,K,Mg,Mn,Na,P,Sr,Zn

one sample per line, decimal-point floats and the token ``ND`` (any case)
for a concentration below the detection limit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParseError, SchemaError, ValidationError


class MineralFeature(enum.IntEnum):
    """The 12 measured mineral elements, in fixed column order."""

    AL = 0
    B = 1
    BA = 2
    CA = 3
    FE = 4
    K = 5
    MG = 6
    MN = 7
    NA = 8
    P = 9
    SR = 10
    ZN = 11


MINERAL_NAMES = ("Al", "B", "Ba", "Ca", "Fe", "K", "Mg", "Mn", "Na", "P", "Sr", "Zn")
N_FEATURES = len(MINERAL_NAMES)


class ClassLabel(enum.IntEnum):
    """Sample classes; integer codes double as matrix indices and tie-breakers."""

    AUTHENTIC = 0
    SYRUP = 1
    ADULTERATED = 2


CLASS_TOKENS = {
    ClassLabel.AUTHENTIC: "authentic",
    ClassLabel.SYRUP: "syrup",
    ClassLabel.ADULTERATED: "adulterated",
}
_CLASS_FROM_TOKEN = {v: k for k, v in CLASS_TOKENS.items()}


class BotanicalOrigin(enum.IntEnum):
    """Floral source of a honey sample; NONE is reserved for sugar syrup."""

    ACACIA = 0
    CHASTE = 1
    JUJUBE = 2
    LINDEN = 3
    RAPE = 4
    TC = 5
    NONE = 6


ORIGIN_TOKENS = {
    BotanicalOrigin.ACACIA: "acacia",
    BotanicalOrigin.CHASTE: "chaste",
    BotanicalOrigin.JUJUBE: "jujube",
    BotanicalOrigin.LINDEN: "linden",
    BotanicalOrigin.RAPE: "rape",
    BotanicalOrigin.TC: "tc",
    BotanicalOrigin.NONE: "none",
}
_ORIGIN_FROM_TOKEN = {v: k for k, v in ORIGIN_TOKENS.items()}

HONEY_ORIGINS = tuple(o for o in BotanicalOrigin if o is not BotanicalOrigin.NONE)

CSV_HEADER = "id,origin,class," + ",".join(MINERAL_NAMES)
MISSING_TOKEN = "ND"


@dataclass(frozen=True)
class Sample:
    """One measured sample; ``values[i] is None`` marks a not-detected mineral."""

    id: str
    origin: BotanicalOrigin
    label: ClassLabel
    values: tuple[float | None, ...]

    def __post_init__(self) -> None:
        if len(self.values) != N_FEATURES:
            raise ValidationError(
                f"sample {self.id!r}: expected {N_FEATURES} values, got {len(self.values)}"
            )
        for i, v in enumerate(self.values):
            if v is None:
                continue
            if not math.isfinite(v):
                raise ValidationError(
                    f"sample {self.id!r}: non-finite value for {MINERAL_NAMES[i]}"
                )
            if v < 0:
                raise ValidationError(
                    f"sample {self.id!r}: negative concentration for {MINERAL_NAMES[i]}"
                )

    @property
    def missing_mask(self) -> tuple[bool, ...]:
        return tuple(v is None for v in self.values)


@dataclass(frozen=True)
class Dataset:
    """Immutable ordered collection of samples."""

    samples: tuple[Sample, ...]

    @property
    def n_samples(self) -> int:
        return len(self.samples)

    @property
    def class_counts(self) -> dict[ClassLabel, int]:
        counts = {c: 0 for c in ClassLabel}
        for s in self.samples:
            counts[s.label] += 1
        return counts

    def labels(self) -> np.ndarray:
        """Class codes in sample order."""
        return np.array([int(s.label) for s in self.samples], dtype=np.int64)

    def subset(self, indices) -> "Dataset":
        return Dataset(tuple(self.samples[i] for i in indices))


@dataclass(frozen=True)
class FoldPlan:
    """Per-sample fold assignment, a pure function of (dataset order, k, seed)."""

    k: int
    assignments: tuple[int, ...]
    seed: int

    def fold_indices(self, fold: int) -> np.ndarray:
        return np.nonzero(np.asarray(self.assignments) == fold)[0]


@dataclass
class ValidationReport:
    n_samples: int
    class_counts: dict[ClassLabel, int]
    nd_rates: dict[str, float]
    origin_counts: dict[BotanicalOrigin, int]
    violations: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations


def _parse_cell(token: str, row: int, col: str) -> float | None:
    token = token.strip()
    if token.upper() == MISSING_TOKEN:
        return None
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"row {row}, column {col}: cannot parse {token!r} as a number") from None
    if not math.isfinite(value):
        raise ParseError(f"row {row}, column {col}: non-finite value {token!r}")
    if value < 0:
        raise ValidationError(f"row {row}, column {col}: negative concentration {value}")
    return value


def parse_csv(raw_text: str) -> Dataset:
    """Parse CSV text into a Dataset.

    Raises SchemaError on a bad header, ParseError on an unreadable cell
    and ValidationError on negative concentrations.
    """
    lines = [ln for ln in raw_text.splitlines() if ln.strip()]
    if not lines:
        raise SchemaError("empty file: missing header row")

    header = [h.strip() for h in lines[0].split(",")]
    expected = CSV_HEADER.split(",")
    if len(header) != len(expected):
        raise SchemaError(
            f"header has {len(header)} columns, expected {len(expected)} ({CSV_HEADER})"
        )
    for got, want in zip(header, expected):
        if got != want:
            raise SchemaError(f"unexpected column {got!r}, expected {want!r}")

    samples = []
    for row_no, line in enumerate(lines[1:], start=2):
        cells = [c.strip() for c in line.split(",")]
        if len(cells) != len(expected):
            raise ParseError(f"row {row_no}: expected {len(expected)} cells, got {len(cells)}")
        sample_id, origin_tok, class_tok = cells[0], cells[1].lower(), cells[2].lower()
        if origin_tok not in _ORIGIN_FROM_TOKEN:
            raise ParseError(f"row {row_no}, column origin: unknown token {origin_tok!r}")
        if class_tok not in _CLASS_FROM_TOKEN:
            raise ParseError(f"row {row_no}, column class: unknown token {class_tok!r}")
        values = tuple(
            _parse_cell(cells[3 + i], row_no, MINERAL_NAMES[i]) for i in range(N_FEATURES)
        )
        samples.append(
            Sample(
                id=sample_id,
                origin=_ORIGIN_FROM_TOKEN[origin_tok],
                label=_CLASS_FROM_TOKEN[class_tok],
                values=values,
            )
        )
    return Dataset(tuple(samples))


def to_csv(ds: Dataset) -> str:
    """Serialize a Dataset back to CSV text; round-trips through parse_csv."""
    out = [CSV_HEADER]
    for s in ds.samples:
        cells = [s.id, ORIGIN_TOKENS[s.origin], CLASS_TOKENS[s.label]]
        cells += [MISSING_TOKEN if v is None else repr(v) for v in s.values]
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


def validate_schema(ds: Dataset) -> ValidationReport:
    """Check dataset-level invariants; violations are reported, never raised."""
    nd_counts = np.zeros(N_FEATURES, dtype=np.int64)
    origin_counts = {o: 0 for o in BotanicalOrigin}
    violations = []

    for s in ds.samples:
        origin_counts[s.origin] += 1
        for i, missing in enumerate(s.missing_mask):
            if missing:
                nd_counts[i] += 1
        if s.label is ClassLabel.SYRUP and s.origin is not BotanicalOrigin.NONE:
            violations.append(
                f"sample {s.id!r}: syrup must have origin none, got {ORIGIN_TOKENS[s.origin]}"
            )
        if s.label is not ClassLabel.SYRUP and s.origin is BotanicalOrigin.NONE:
            violations.append(f"sample {s.id!r}: honey sample must have a botanical origin")

    n = ds.n_samples
    if n == 0:
        violations.append("no samples")
    nd_rates = {
        MINERAL_NAMES[i]: (float(nd_counts[i]) / n if n else 0.0) for i in range(N_FEATURES)
    }
    return ValidationReport(
        n_samples=n,
        class_counts=ds.class_counts,
        nd_rates=nd_rates,
        origin_counts=origin_counts,
        violations=violations,
    )


def stratified_folds(ds: Dataset, k: int, seed: int) -> FoldPlan:
    """Assign samples to k folds, stratified by class.

    Per class the sample indices are shuffled (seeded) and dealt round-robin,
    so per-class fold sizes differ by at most one. A class with fewer than k
    samples lands in its first count-many folds.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if k > ds.n_samples:
        raise ValueError(f"k={k} exceeds the number of samples ({ds.n_samples})")

    rng = np.random.default_rng(seed)
    assignments = np.full(ds.n_samples, -1, dtype=np.int64)
    labels = ds.labels()
    for c in ClassLabel:
        idx = np.nonzero(labels == int(c))[0]
        if idx.size == 0:
            continue
        rng.shuffle(idx)
        assignments[idx] = np.arange(idx.size) % k
    return FoldPlan(k=k, assignments=tuple(int(a) for a in assignments), seed=seed)


def filter_by_origin(ds: Dataset, origin: BotanicalOrigin) -> Dataset:
    """Honey samples (authentic + adulterated) of one origin; syrup excluded."""
    if origin is BotanicalOrigin.NONE:
        raise ValueError("origin must be a botanical origin, not none")
    return Dataset(
        tuple(
            s
            for s in ds.samples
            if s.origin is origin and s.label is not ClassLabel.SYRUP
        )
    )
