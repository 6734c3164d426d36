
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qperceptron import (
    LabeledExample,
    PerceptronModel,
    QueryLedger,
    TrainingSet,
    margin,
    misclassifies,
    perceptron_update,
)


def unit(v):
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


# -- LabeledExample / TrainingSet validation ------------------------------


def test_example_requires_unit_norm():
    LabeledExample(np.array([0.6, 0.8]), 1)
    with pytest.raises(ValueError, match="unit norm"):
        LabeledExample(np.array([0.6, 0.9]), 1)


def test_example_requires_pm1_label():
    with pytest.raises(ValueError, match="label"):
        LabeledExample(np.array([1.0, 0.0]), 0)


def test_example_norm_tolerance_boundary():
    LabeledExample(np.array([1.0 + 0.9e-9, 0.0]), -1)
    with pytest.raises(ValueError):
        LabeledExample(np.array([1.0 + 2e-9, 0.0]), -1)


def test_training_set_rejects_bad_rows():
    with pytest.raises(ValueError):
        TrainingSet([[1.0, 0.0], [0.5, 0.5]], [1, -1])
    with pytest.raises(ValueError):
        TrainingSet([[1.0, 0.0]], [2])
    with pytest.raises(ValueError):
        TrainingSet(np.empty((0, 3)), [])


def test_training_set_order_is_stable():
    x = np.eye(3)
    data = TrainingSet(x, [1, -1, 1])
    assert data.n == 3 and data.dim == 3
    for i in range(3):
        assert np.array_equal(data[i].features, x[i])
    assert [e.label for e in data] == [1, -1, 1]


def test_training_set_is_immutable():
    data = TrainingSet(np.eye(2), [1, -1])
    with pytest.raises(ValueError):
        data.features[0, 0] = 2.0
    with pytest.raises(ValueError):
        data.labels[0] = -1


def test_csv_round_trip(tmp_path, planted_small):
    path = tmp_path / "data.csv"
    planted_small.data.to_csv(path)
    loaded = TrainingSet.from_csv(path)
    assert loaded == planted_small.data


def test_json_round_trip(tmp_path, planted_small):
    path = tmp_path / "data.json"
    planted_small.data.to_json(path)
    loaded = TrainingSet.from_json(path)
    assert loaded == planted_small.data


def test_json_dict_shape():
    payload = TrainingSet(np.eye(2), [1, -1]).to_json_dict()
    assert payload["dim"] == 2
    assert payload["examples"][0] == {"phi": [1.0, 0.0], "y": 1}


# -- misclassifies ---------------------------------------------------------


def test_zero_model_misclassifies_everything():
    model = PerceptronModel.zeros(2)
    assert misclassifies(model, LabeledExample([1.0, 0.0], 1))
    assert misclassifies(model, LabeledExample([0.0, 1.0], -1))


def test_aligned_example_is_correct():
    phi = unit([0.3, -0.4, 0.5])
    assert not misclassifies(PerceptronModel(phi), LabeledExample(phi, 1))


def test_orthogonal_tie_counts_as_mistake():
    # score y <w, phi> = 0: ties are mistakes
    model = PerceptronModel([1.0, 0.0])
    assert misclassifies(model, LabeledExample([0.0, 1.0], -1))


def test_misclassifies_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension"):
        misclassifies(PerceptronModel([1.0, 0.0, 0.0]), LabeledExample([1.0, 0.0], 1))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_mistake_predicate_partitions_all_cases(seed):
    rng = np.random.default_rng(seed)
    w = rng.standard_normal(3)
    phi = unit(rng.standard_normal(3))
    y = int(rng.choice([-1, 1]))
    wrong = misclassifies(PerceptronModel(w), LabeledExample(phi, y))
    assert wrong != (y * float(w @ phi) > 0.0)


# -- perceptron_update -----------------------------------------------------


def test_update_from_zero():
    model = perceptron_update(PerceptronModel.zeros(2), LabeledExample([1.0, 0.0], 1))
    assert np.array_equal(model.weights, [1.0, 0.0])


def test_update_componentwise():
    model = perceptron_update(PerceptronModel([1.0, 0.0]), LabeledExample([0.0, 1.0], -1))
    assert np.array_equal(model.weights, [1.0, -1.0])


def test_update_does_not_mutate_input():
    before = PerceptronModel([1.0, 0.0])
    perceptron_update(before, LabeledExample([0.0, 1.0], -1))
    assert np.array_equal(before.weights, [1.0, 0.0])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_update_raises_signed_score_by_one(seed):
    rng = np.random.default_rng(seed)
    w = rng.standard_normal(5) * rng.uniform(0, 3)
    phi = unit(rng.standard_normal(5))
    y = int(rng.choice([-1, 1]))
    example = LabeledExample(phi, y)
    before = y * float(w @ phi)
    after_model = perceptron_update(PerceptronModel(w), example)
    after = y * float(after_model.weights @ phi)
    assert after == pytest.approx(before + 1.0, abs=1e-12)


# -- margin ----------------------------------------------------------------


def test_margin_single_aligned_example(single_example_set):
    assert margin(single_example_set, PerceptronModel([1.0, 0.0])) == pytest.approx(1.0)


def test_margin_planted_is_at_least_gamma(planted_small):
    # brute force: min over examples of normalized signed score
    data, w_star = planted_small.data, planted_small.w_star
    brute = min(
        e.label * float(w_star @ e.features) / np.linalg.norm(w_star) for e in data
    )
    assert margin(data, PerceptronModel(w_star)) == pytest.approx(brute, abs=1e-12)
    assert brute >= planted_small.gamma_planted - 1e-9


def test_margin_contradictory_labels_nonpositive(contradictory_set):
    rng = np.random.default_rng(3)
    for _ in range(10):
        w = rng.standard_normal(2)
        assert margin(contradictory_set, PerceptronModel(w)) <= 0.0


def test_margin_rejects_zero_weights(single_example_set):
    with pytest.raises(ValueError, match="zero"):
        margin(single_example_set, PerceptronModel.zeros(2))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0.01, 1000.0))
def test_margin_scale_invariance(seed, scale):
    rng = np.random.default_rng(seed)
    x = np.stack([unit(rng.standard_normal(3)) for _ in range(4)])
    data = TrainingSet(x, [1, -1, 1, -1])
    w = rng.standard_normal(3)
    if np.linalg.norm(w) == 0.0:
        return
    base = margin(data, PerceptronModel(w))
    scaled = margin(data, PerceptronModel(scale * w))
    assert scaled == pytest.approx(base, abs=1e-12)


# -- QueryLedger -----------------------------------------------------------


def test_ledger_counters_accumulate():
    ledger = QueryLedger()
    ledger.charge_quantum(3)
    ledger.charge_classical(2)
    ledger.charge_composite(4, n_examples=10)
    assert ledger.quantum_oracle_queries == 3 + 2 * 10 * 4
    assert ledger.classical_oracle_queries == 2
    assert ledger.composite_oracle_queries == 4
    # composite charging keeps the quantum counter at >= 2N per composite query
    assert ledger.quantum_oracle_queries >= 2 * 10 * ledger.composite_oracle_queries


def test_ledger_rejects_negative_charges():
    ledger = QueryLedger()
    with pytest.raises(ValueError):
        ledger.charge_quantum(-1)
    with pytest.raises(ValueError):
        ledger.charge_composite(1, n_examples=0)
