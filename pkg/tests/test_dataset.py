import numpy as np
import pytest

from honeyauth.dataset import (
    CSV_HEADER,
    BotanicalOrigin,
    ClassLabel,
    MineralFeature,
    filter_by_origin,
    parse_csv,
    stratified_folds,
    to_csv,
    validate_schema,
)
from honeyauth.errors import ParseError, SchemaError, ValidationError
from honeyauth.synth import generate_synthetic, preset_config

from helpers import dataset_from_matrix

FULL_ROW = "s1,acacia,authentic," + ",".join(str(v) for v in range(1, 13))


def csv_text(*rows):
    return CSV_HEADER + "\n" + "\n".join(rows) + "\n"


class TestParse:
    def test_full_row(self):
        ds = parse_csv(csv_text(FULL_ROW))
        s = ds.samples[0]
        assert s.id == "s1"
        assert s.origin is BotanicalOrigin.ACACIA
        assert s.label is ClassLabel.AUTHENTIC
        assert s.values == tuple(float(v) for v in range(1, 13))
        assert not any(s.missing_mask)

    def test_nd_cell_marks_missing(self):
        row = "s1,none,syrup,1,2,ND,4,5,6,7,8,9,10,11,12"
        ds = parse_csv(csv_text(row))
        mask = ds.samples[0].missing_mask
        assert mask[MineralFeature.BA]
        assert sum(mask) == 1
        assert ds.samples[0].values[MineralFeature.BA] is None

    def test_nd_is_case_insensitive(self):
        row = "s1,none,syrup,nd,Nd,nD,4,5,6,7,8,9,10,11,12"
        ds = parse_csv(csv_text(row))
        assert sum(ds.samples[0].missing_mask) == 3

    def test_header_mismatch_names_column(self):
        bad = CSV_HEADER.replace("Ba", "Beryllium")
        with pytest.raises(SchemaError, match="Ba"):
            parse_csv(bad + "\n" + FULL_ROW)

    def test_header_wrong_width(self):
        with pytest.raises(SchemaError, match="columns"):
            parse_csv("id,origin,class\n")

    def test_bad_cell_reports_row_and_column(self):
        row = "s1,acacia,authentic,1,2,oops,4,5,6,7,8,9,10,11,12"
        with pytest.raises(ParseError, match=r"row 2.*Ba"):
            parse_csv(csv_text(row))

    def test_negative_concentration_rejected(self):
        row = "s1,acacia,authentic,1,2,-3,4,5,6,7,8,9,10,11,12"
        with pytest.raises(ValidationError, match="negative"):
            parse_csv(csv_text(row))

    def test_unknown_tokens(self):
        with pytest.raises(ParseError, match="origin"):
            parse_csv(csv_text(FULL_ROW.replace("acacia", "lavender")))
        with pytest.raises(ParseError, match="class"):
            parse_csv(csv_text(FULL_ROW.replace("authentic", "genuine")))

    def test_realistic_file_class_counts(self):
        # The separable preset mirrors the real file's class balance.
        ds = generate_synthetic(preset_config("separable"), seed=11)
        text = to_csv(ds)
        reparsed = parse_csv(text)
        assert reparsed.n_samples == 429
        assert reparsed.class_counts == {
            ClassLabel.AUTHENTIC: 201,
            ClassLabel.SYRUP: 45,
            ClassLabel.ADULTERATED: 183,
        }

    def test_roundtrip_equality(self):
        ds = generate_synthetic(preset_config("separable"), seed=5)
        assert parse_csv(to_csv(ds)) == ds


class TestValidate:
    def test_empty_dataset_flagged(self):
        rep = validate_schema(parse_csv(CSV_HEADER + "\n"))
        assert not rep.valid
        assert any("no samples" in v for v in rep.violations)

    def test_syrup_with_origin_flagged(self):
        row = "s1,acacia,syrup,1,2,3,4,5,6,7,8,9,10,11,12"
        rep = validate_schema(parse_csv(csv_text(row)))
        assert any("syrup" in v for v in rep.violations)

    def test_honey_without_origin_flagged(self):
        row = "s1,none,authentic,1,2,3,4,5,6,7,8,9,10,11,12"
        rep = validate_schema(parse_csv(csv_text(row)))
        assert not rep.valid

    def test_valid_dataset(self):
        ds = generate_synthetic(preset_config("separable"), seed=2)
        rep = validate_schema(ds)
        assert rep.valid
        assert rep.n_samples == 429
        assert sum(1 for n in rep.class_counts.values() if n > 0) == 3
        assert rep.nd_rates["Ba"] > 0  # preset injects some ND on Ba


class TestStratifiedFolds:
    def test_fold_sizes_realistic_counts(self):
        ds = generate_synthetic(preset_config("separable"), seed=3)
        plan = stratified_folds(ds, k=10, seed=42)
        labels = ds.labels()
        assignments = np.asarray(plan.assignments)
        expected = {
            ClassLabel.AUTHENTIC: {20, 21},
            ClassLabel.SYRUP: {4, 5},
            ClassLabel.ADULTERATED: {18, 19},
        }
        for c, allowed in expected.items():
            sizes = {int((assignments[labels == int(c)] == f).sum()) for f in range(10)}
            assert sizes <= allowed

    def test_partition_and_balance(self):
        rng = np.random.default_rng(0)
        for k in (2, 3, 7):
            X = rng.random((40, 12))
            y = rng.integers(0, 3, size=40)
            y[:3] = [0, 1, 2]
            ds = dataset_from_matrix(X, y)
            plan = stratified_folds(ds, k=k, seed=9)
            assignments = np.asarray(plan.assignments)
            assert assignments.min() >= 0 and assignments.max() < k
            labels = ds.labels()
            for c in np.unique(labels):
                sizes = [int(((assignments == f) & (labels == c)).sum()) for f in range(k)]
                assert max(sizes) - min(sizes) <= 1

    def test_deterministic(self):
        ds = generate_synthetic(preset_config("separable"), seed=3)
        a = stratified_folds(ds, k=10, seed=7)
        b = stratified_folds(ds, k=10, seed=7)
        assert a == b
        c = stratified_folds(ds, k=10, seed=8)
        assert c != a

    def test_small_class_spread_over_first_folds(self):
        X = np.zeros((14, 12))
        y = [0] * 10 + [1] * 4
        ds = dataset_from_matrix(X, y)
        plan = stratified_folds(ds, k=2, seed=1)
        assignments = np.asarray(plan.assignments)
        minority = assignments[10:]
        assert sorted((minority == f).sum() for f in range(2)) == [2, 2]

    def test_k_validation(self):
        ds = dataset_from_matrix(np.zeros((6, 12)), [0, 0, 1, 1, 2, 2])
        with pytest.raises(ValueError):
            stratified_folds(ds, k=1, seed=0)
        with pytest.raises(ValueError):
            stratified_folds(ds, k=7, seed=0)


class TestFilterByOrigin:
    def test_no_matching_rows(self):
        ds = dataset_from_matrix(np.zeros((4, 12)), [0, 0, 2, 2])
        assert filter_by_origin(ds, BotanicalOrigin.RAPE).n_samples == 0

    def test_filter_excludes_syrup(self):
        origins = [
            BotanicalOrigin.ACACIA,
            BotanicalOrigin.NONE,
            BotanicalOrigin.ACACIA,
            BotanicalOrigin.RAPE,
        ]
        ds = dataset_from_matrix(np.zeros((4, 12)), [0, 1, 2, 0], origins=origins)
        sub = filter_by_origin(ds, BotanicalOrigin.ACACIA)
        assert sub.n_samples == 2
        assert all(s.origin is BotanicalOrigin.ACACIA for s in sub.samples)
        assert all(s.label is not ClassLabel.SYRUP for s in sub.samples)

    def test_idempotent(self):
        ds = generate_synthetic(preset_config("separable"), seed=4)
        once = filter_by_origin(ds, BotanicalOrigin.JUJUBE)
        assert filter_by_origin(once, BotanicalOrigin.JUJUBE) == once

    def test_union_over_origins_excludes_syrup_count(self):
        ds = generate_synthetic(preset_config("separable"), seed=4)
        total = sum(
            filter_by_origin(ds, o).n_samples
            for o in BotanicalOrigin
            if o is not BotanicalOrigin.NONE
        )
        assert total == 429 - 45

    def test_none_rejected(self):
        ds = dataset_from_matrix(np.zeros((2, 12)), [0, 2])
        with pytest.raises(ValueError):
            filter_by_origin(ds, BotanicalOrigin.NONE)


class TestSynthetic:
    def test_count_bookkeeping(self):
        cfg = preset_config("planted")
        cfg.n_per_class = (10, 10, 10)
        ds = generate_synthetic(cfg, seed=0)
        assert ds.n_samples == 30
        assert all(n == 10 for n in ds.class_counts.values())

    def test_certain_nd_injection(self):
        cfg = preset_config("planted")
        cfg.nd_probs[int(ClassLabel.SYRUP), MineralFeature.BA] = 1.0
        ds = generate_synthetic(cfg, seed=0)
        syrup = [s for s in ds.samples if s.label is ClassLabel.SYRUP]
        assert syrup and all(s.missing_mask[MineralFeature.BA] for s in syrup)

    def test_bit_identical_for_fixed_seed(self):
        a = generate_synthetic(preset_config("separable"), seed=21)
        b = generate_synthetic(preset_config("separable"), seed=21)
        assert to_csv(a) == to_csv(b)

    def test_invalid_config_rejected(self):
        cfg = preset_config("planted")
        cfg.nd_probs[0, 0] = 1.5
        with pytest.raises(ValueError):
            generate_synthetic(cfg, seed=0)

    def test_values_physical(self):
        ds = generate_synthetic(preset_config("separable"), seed=13)
        for s in ds.samples:
            for v in s.values:
                assert v is None or v >= 0
