import numpy as np
import pytest

from honeyauth.metrics import (
    ConfusionMatrix,
    aggregate_metrics,
    class_metrics,
    confusion_matrix,
)

# Hand-checked reference matrices for the three-class task (rows = true,
# columns = predicted; class order authentic, syrup, adulterated).
CM_LINEAR = np.array([[147, 0, 54], [0, 45, 0], [57, 0, 126]])
CM_TREE = np.array([[195, 0, 6], [0, 45, 0], [6, 0, 177]])
CM_FOREST = np.array([[195, 0, 6], [0, 45, 0], [1, 0, 182]])


def as_cm(counts):
    return ConfusionMatrix(counts=np.asarray(counts), classes=(0, 1, 2))


def expand(cm):
    """Build (y_true, y_pred) vectors realizing a counts matrix."""
    y_true, y_pred = [], []
    for i in range(cm.shape[0]):
        for j in range(cm.shape[1]):
            y_true += [i] * cm[i, j]
            y_pred += [j] * cm[i, j]
    return np.array(y_true), np.array(y_pred)


class TestConfusionMatrix:
    def test_perfect_predictions_are_diagonal(self):
        y = np.array([0, 1, 2, 2, 0])
        cm = confusion_matrix(y, y, classes=(0, 1, 2))
        assert np.array_equal(cm.counts, np.diag([2, 1, 2]))

    def test_empty_inputs(self):
        cm = confusion_matrix([], [], classes=(0, 1, 2))
        assert cm.total == 0
        assert np.array_equal(cm.counts, np.zeros((3, 3), dtype=np.int64))

    def test_reconstructs_reference_matrix(self):
        y_true, y_pred = expand(CM_LINEAR)
        cm = confusion_matrix(y_true, y_pred, classes=(0, 1, 2))
        assert np.array_equal(cm.counts, CM_LINEAR)
        assert cm.total == 429

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            confusion_matrix([0, 1], [0], classes=(0, 1))

    def test_unknown_label_rejected(self):
        with pytest.raises(ValueError, match="3"):
            confusion_matrix([0, 3], [0, 0], classes=(0, 1, 2))

    def test_binary_with_sparse_codes(self):
        cm = confusion_matrix([0, 2, 2], [0, 0, 2], classes=(0, 2))
        assert cm.classes == (0, 2)
        assert np.array_equal(cm.counts, [[1, 0], [1, 1]])


class TestClassMetrics:
    def test_linear_reference_values(self):
        m = class_metrics(as_cm(CM_LINEAR))
        authentic, syrup, adulterated = m
        assert authentic.precision == pytest.approx(147 / 204, abs=1e-12)
        assert authentic.recall == pytest.approx(147 / 201, abs=1e-12)
        assert authentic.f1 == pytest.approx(98 / 135, abs=1e-12)
        assert syrup.precision == syrup.recall == syrup.f1 == 1.0
        assert adulterated.precision == pytest.approx(0.7, abs=1e-12)
        assert adulterated.recall == pytest.approx(126 / 183, abs=1e-12)
        assert adulterated.f1 == pytest.approx(588 / 847, abs=1e-12)

    def test_forest_reference_values(self):
        m = class_metrics(as_cm(CM_FOREST))
        assert m[0].precision == pytest.approx(195 / 196, abs=1e-12)
        assert m[0].recall == pytest.approx(195 / 201, abs=1e-12)
        assert m[2].recall == pytest.approx(182 / 183, abs=1e-12)

    def test_diagonal_matrix_is_perfect(self):
        m = class_metrics(as_cm(np.diag([5, 3, 2])))
        assert all(x.precision == x.recall == x.f1 == 1.0 for x in m)

    def test_undefined_denominators_flagged(self):
        # class 2 never predicted, class 1 has no true samples
        cm = as_cm(np.array([[4, 1, 0], [0, 0, 0], [1, 2, 0]]))
        m = class_metrics(cm)
        assert m[2].precision == 0.0 and m[2].precision_undefined
        assert m[1].recall == 0.0 and m[1].recall_undefined
        assert m[1].f1 == 0.0

    def test_f1_zero_when_either_component_zero(self):
        cm = as_cm(np.array([[0, 5, 0], [5, 0, 0], [0, 0, 5]]))
        m = class_metrics(cm)
        assert m[0].f1 == 0.0 and m[1].f1 == 0.0


class TestAggregates:
    def test_reference_accuracies(self):
        assert aggregate_metrics(as_cm(CM_LINEAR)).accuracy == pytest.approx(318 / 429, abs=1e-12)
        assert aggregate_metrics(as_cm(CM_TREE)).accuracy == pytest.approx(417 / 429, abs=1e-12)
        assert aggregate_metrics(as_cm(CM_FOREST)).accuracy == pytest.approx(422 / 429, abs=1e-12)

    def test_weighted_recall_equals_accuracy(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            counts = rng.integers(0, 30, size=(3, 3))
            counts[0, 0] += 1  # non-empty
            agg = aggregate_metrics(as_cm(counts))
            assert agg.weighted_recall == pytest.approx(agg.accuracy, abs=1e-12)

    def test_metric_ranges(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            counts = rng.integers(0, 30, size=(3, 3))
            counts[1, 2] += 1
            agg = aggregate_metrics(as_cm(counts))
            for value in vars(agg).values():
                assert 0.0 <= value <= 1.0

    def test_empty_total_rejected(self):
        with pytest.raises(ValueError):
            aggregate_metrics(as_cm(np.zeros((3, 3), dtype=int)))
