import numpy as np
import pytest

from qperceptron import TrainingSet, generate_margin_dataset


@pytest.fixture
def planted_small():
    """Easy separable dataset: 64 examples, 4 dims, margin 0.2."""
    return generate_margin_dataset(64, 4, 0.2, seed=7)


@pytest.fixture
def single_example_set():
    return TrainingSet(np.array([[1.0, 0.0]]), [1])


@pytest.fixture
def contradictory_set():
    """The same point under both labels: inseparable by construction."""
    return TrainingSet(np.array([[1.0, 0.0], [1.0, 0.0]]), [1, -1])


def one_mistake_problem(n=64, dim=4, gamma=0.3, seed=11, flip=0):
    """Planted data with one label flipped, so the planted separator errs on
    exactly that example."""
    planted = generate_margin_dataset(n, dim, gamma, seed=seed)
    labels = planted.data.labels.copy()
    labels[flip] = -labels[flip]
    data = TrainingSet(planted.data.features, labels)
    return data, planted.w_star
