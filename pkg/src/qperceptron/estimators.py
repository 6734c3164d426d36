"""Scikit-learn style wrappers around the training drivers.

Each estimator owns the parameters of one trainer, exposes ``fit(X, y)`` /
``predict(X)`` / ``decision_function(X)``, and stores the fitted weight
vector in ``coef_`` together with the run's query counters in ``ledger_``.
Inputs must already be unit-norm rows labeled -1/+1; violating rows are
rejected rather than silently renormalized.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin

from ._validation import as_feature_matrix
from .core import TrainingSet
from .online import (
    OnlineTrainConfig,
    TrainReport,
    train_online_classical,
    train_online_quantum,
    train_online_streaming,
)
from .vspace import VSTrainConfig, train_version_space_classical, train_version_space_quantum

__all__ = [
    "QuantumPerceptron",
    "SamplingPerceptron",
    "StreamingPerceptron",
    "QuantumVersionSpacePerceptron",
    "SamplingVersionSpacePerceptron",
]


class _FittedPerceptronMixin(BaseEstimator, ClassifierMixin):
    """Shared prediction surface for all trainers in this package."""

    def _store(self, report: TrainReport, n_features: int) -> "_FittedPerceptronMixin":
        self.coef_ = report.model.weights
        self.n_updates_ = report.updates_made
        self.converged_ = report.converged
        self.ledger_ = report.ledger
        self.n_features_in_ = n_features
        self.classes_ = np.array([-1, 1])
        return self

    def decision_function(self, X) -> np.ndarray:
        self._check_fitted()
        X = as_feature_matrix(X, "X")
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, estimator was fitted with {self.n_features_in_}"
            )
        return X @ self.coef_

    def predict(self, X) -> np.ndarray:
        """Labels in {-1, +1}; a zero or tied score predicts -1."""
        return np.where(self.decision_function(X) > 0.0, 1, -1)

    def _check_fitted(self) -> None:
        if not hasattr(self, "coef_"):
            raise ValueError(
                f"this {type(self).__name__} instance is not fitted yet; call fit first"
            )

    @staticmethod
    def _training_set(X, y) -> TrainingSet:
        return TrainingSet(X, y)


class QuantumPerceptron(_FittedPerceptronMixin):
    """Online perceptron that finds each mistake by amplitude amplification.

    Parameters
    ----------
    epsilon : float
        Total tolerated probability of finishing without a separator.
    gamma : float
        Assumed lower bound on the data margin; budgets updates and search
        failure rates.
    c : float
        Growth factor of the geometric iteration schedule, in (1, 2).
    random_state : int
        Seed for the simulated measurements.
    """

    def __init__(self, epsilon=0.1, gamma=0.1, c=1.5, random_state=0):
        self.epsilon = epsilon
        self.gamma = gamma
        self.c = c
        self.random_state = random_state

    def fit(self, X, y):
        data = self._training_set(X, y)
        config = OnlineTrainConfig(
            epsilon=self.epsilon, gamma_bound=self.gamma, c=self.c, seed=self.random_state
        )
        return self._store(train_online_quantum(data, config), data.dim)


class SamplingPerceptron(_FittedPerceptronMixin):
    """Online perceptron that finds each mistake by uniform sampling."""

    def __init__(self, epsilon=0.1, gamma=0.1, random_state=0):
        self.epsilon = epsilon
        self.gamma = gamma
        self.random_state = random_state

    def fit(self, X, y):
        data = self._training_set(X, y)
        config = OnlineTrainConfig(
            epsilon=self.epsilon, gamma_bound=self.gamma, seed=self.random_state
        )
        return self._store(train_online_classical(data, config), data.dim)


class StreamingPerceptron(_FittedPerceptronMixin):
    """Deterministic perceptron sweeping the data in index order.

    ``gamma=None`` runs until a clean sweep (with a large safety cap on the
    number of sweeps); supplying ``gamma`` budgets the sweeps explicitly.
    """

    def __init__(self, gamma=None):
        self.gamma = gamma

    def fit(self, X, y):
        data = self._training_set(X, y)
        return self._store(train_online_streaming(data, self.gamma), data.dim)


class QuantumVersionSpacePerceptron(_FittedPerceptronMixin):
    """Searches a Gaussian candidate ensemble for a consistent hyperplane.

    ``k_override`` pins the ensemble size; otherwise it is derived from
    ``gamma`` and ``epsilon``. When no candidate passes, ``coef_`` is the
    zero vector and ``converged_`` is False.
    """

    def __init__(self, epsilon=0.1, gamma=0.1, c=1.5, k_override=None, random_state=0):
        self.epsilon = epsilon
        self.gamma = gamma
        self.c = c
        self.k_override = k_override
        self.random_state = random_state

    def fit(self, X, y):
        data = self._training_set(X, y)
        config = VSTrainConfig(
            epsilon=self.epsilon,
            gamma_bound=self.gamma,
            c=self.c,
            k_override=self.k_override,
            seed=self.random_state,
        )
        return self._store(train_version_space_quantum(data, config), data.dim)


class SamplingVersionSpacePerceptron(_FittedPerceptronMixin):
    """Rejection-samples Gaussian hyperplanes until one is consistent."""

    def __init__(self, epsilon=0.1, gamma=0.1, k_override=None, random_state=0):
        self.epsilon = epsilon
        self.gamma = gamma
        self.k_override = k_override
        self.random_state = random_state

    def fit(self, X, y):
        data = self._training_set(X, y)
        config = VSTrainConfig(
            epsilon=self.epsilon,
            gamma_bound=self.gamma,
            k_override=self.k_override,
            seed=self.random_state,
        )
        return self._store(train_version_space_classical(data, config), data.dim)
