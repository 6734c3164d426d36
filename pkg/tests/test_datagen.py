import numpy as np
import pytest

from qperceptron import (
    PerceptronModel,
    TrainingSet,
    generate_margin_dataset,
    margin,
    measure_empirical_margin,
)
from qperceptron.datagen import load_dataset, save_dataset


def test_generated_features_are_exactly_unit_norm():
    planted = generate_margin_dataset(200, 6, 0.3, seed=0)
    norms = np.linalg.norm(planted.data.features, axis=1)
    assert np.max(np.abs(norms - 1.0)) < 1e-12


def test_planted_margin_holds_by_brute_force():
    for seed in range(10):
        planted = generate_margin_dataset(64, 5, 0.15, seed=seed)
        scores = planted.data.labels * (planted.data.features @ planted.w_star)
        assert scores.min() >= 0.15 - 1e-9
        assert margin(planted.data, PerceptronModel(planted.w_star)) >= 0.15 - 1e-9


def test_generation_is_deterministic():
    a = generate_margin_dataset(32, 4, 0.2, seed=9)
    b = generate_margin_dataset(32, 4, 0.2, seed=9)
    assert np.array_equal(a.data.features, b.data.features)
    assert np.array_equal(a.data.labels, b.data.labels)
    assert np.array_equal(a.w_star, b.w_star)
    c = generate_margin_dataset(32, 4, 0.2, seed=10)
    assert not np.array_equal(a.data.features, c.data.features)


def test_both_labels_always_present():
    for seed in range(200):
        planted = generate_margin_dataset(2, 3, 0.5, seed=seed)
        assert set(np.unique(planted.data.labels)) == {-1, 1}


def test_label_balance_across_seeds():
    fractions = []
    for seed in range(100):
        planted = generate_margin_dataset(256, 4, 0.2, seed=seed)
        fractions.append(float(np.mean(planted.data.labels == 1)))
    assert 0.4 <= min(fractions) and max(fractions) <= 0.6


def test_high_margin_examples_hug_the_separator():
    planted = generate_margin_dataset(2, 4, 0.99, seed=2)
    alignment = np.abs(planted.data.features @ planted.w_star)
    assert np.all(alignment >= 0.99)


def test_pin_to_margin_variant():
    planted = generate_margin_dataset(50, 4, 0.3, seed=1, pin_to_margin=True)
    scores = planted.data.labels * (planted.data.features @ planted.w_star)
    assert scores == pytest.approx(np.full(50, 0.3), abs=1e-12)


def test_generator_argument_validation():
    with pytest.raises(ValueError):
        generate_margin_dataset(1, 4, 0.2, seed=0)
    with pytest.raises(ValueError):
        generate_margin_dataset(8, 1, 0.2, seed=0)
    with pytest.raises(ValueError):
        generate_margin_dataset(8, 4, 0.0, seed=0)
    with pytest.raises(ValueError):
        generate_margin_dataset(8, 4, 1.0, seed=0)


def test_generated_data_passes_training_set_validation():
    planted = generate_margin_dataset(128, 3, 0.05, seed=4)
    rebuilt = TrainingSet(planted.data.features, planted.data.labels)
    assert rebuilt == planted.data


# -- empirical margin ----------------------------------------------------------


def test_empirical_margin_at_least_planted(planted_small):
    est = measure_empirical_margin(planted_small.data, w_star=planted_small.w_star)
    assert est >= planted_small.gamma_planted - 1e-9


def test_empirical_margin_contradictory_data(contradictory_set):
    assert measure_empirical_margin(contradictory_set, n_probes=500) <= 0.0


def test_empirical_margin_single_example(single_example_set):
    assert measure_empirical_margin(single_example_set) == pytest.approx(1.0, abs=1e-12)


# -- persistence -----------------------------------------------------------------


def test_save_load_round_trip(tmp_path, planted_small):
    path = tmp_path / "planted.csv"
    sidecar = save_dataset(planted_small, path)
    assert sidecar.name == "planted.meta.json"
    loaded = load_dataset(path)
    assert loaded.data == planted_small.data
    assert np.array_equal(loaded.w_star, planted_small.w_star)
    assert loaded.gamma_planted == planted_small.gamma_planted
    assert loaded.seed == planted_small.seed


def test_load_requires_sidecar(tmp_path, planted_small):
    path = tmp_path / "planted.csv"
    planted_small.data.to_csv(path)
    with pytest.raises(FileNotFoundError):
        load_dataset(path)
