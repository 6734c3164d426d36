"""Online perceptron training drivers.

Three interchangeable trainers share one loop: find a misclassified example,
apply the additive correction, stop when no example can be found. They
differ only in the search primitive and therefore in query cost:

* :func:`train_online_quantum` searches by amplitude amplification over the
  example indices (sublinear oracle cost per search),
* :func:`train_online_classical` samples indices uniformly with replacement
  (the matched classical baseline),
* :func:`train_online_streaming` sweeps the set in index order
  (deterministic, no randomness at all).

On unit-norm data separable with margin ``gamma`` any mistake-driven run
from the zero model makes at most ``ceil(1/gamma^2)`` updates, so the loop
is budgeted by that bound and the per-search failure probability is set to
``epsilon * gamma^2``, giving total failure probability at most ``epsilon``
by the union bound over search rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_growth_factor, check_probability
from .core import (
    LabeledExample,
    PerceptronModel,
    QueryLedger,
    TrainingSet,
    misclassifies,
    perceptron_update,
)
from .grover import GroverInstance, exponential_search

__all__ = [
    "OnlineTrainConfig",
    "TrainReport",
    "failure_rounds_for",
    "quantum_find_misclassified",
    "classical_find_misclassified",
    "train_online_quantum",
    "train_online_classical",
    "train_online_streaming",
]

_STREAMING_SWEEP_CAP = 10_000


@dataclass(frozen=True)
class OnlineTrainConfig:
    """Knobs for the randomized online trainers.

    ``gamma_bound`` is the assumed lower bound on the data's margin; it sets
    the update budget ceil(1/gamma^2) and the per-search failure budget
    epsilon * gamma^2. ``c`` is the geometric schedule growth factor.
    """

    epsilon: float
    gamma_bound: float
    c: float = 1.5
    seed: int = 0

    def __post_init__(self):
        check_probability(self.epsilon, "epsilon")
        check_probability(self.gamma_bound, "gamma_bound", inclusive_high=True)
        check_growth_factor(self.c)

    @property
    def max_updates(self) -> int:
        return math.ceil(1.0 / self.gamma_bound**2)

    @property
    def per_search_delta(self) -> float:
        return self.epsilon * self.gamma_bound**2


@dataclass
class TrainReport:
    """What a training run produced and what it cost."""

    model: PerceptronModel
    updates_made: int
    converged: bool
    ledger: QueryLedger = field(default_factory=QueryLedger)


def failure_rounds_for(delta: float) -> int:
    """Schedule passes ceil(log_{3/4}(delta)) to push the miss rate below delta."""
    check_probability(delta, "delta")
    return math.ceil(math.log(delta) / math.log(0.75))


def _mistake_mask(weights: np.ndarray, data: TrainingSet) -> np.ndarray:
    return data.labels * (data.features @ weights) <= 0.0


def quantum_find_misclassified(
    model: PerceptronModel,
    data: TrainingSet,
    delta: float,
    c: float,
    rng: np.random.Generator,
    ledger: QueryLedger,
) -> LabeledExample | None:
    """Search the training set for a misclassified example by amplification.

    Marks exactly the indices the current model gets wrong and runs the
    geometric-schedule search with ceil(log_{3/4} delta) passes, so if any
    mistake exists one is returned with probability at least 1 - delta,
    at O(sqrt(n) log(1/delta)) quantum queries. Each measured index is
    re-checked classically (one classical query) before being returned.
    """
    if model.dim != data.dim:
        raise ValueError(f"dimension mismatch: model {model.dim}, data {data.dim}")
    instance = GroverInstance(_mistake_mask(model.weights, data))

    def verify(i: int) -> bool:
        return misclassifies(model, data[i])

    index = exponential_search(
        instance,
        c=c,
        failure_rounds=failure_rounds_for(delta),
        rng=rng,
        verify=verify,
        ledger=ledger,
    )
    return None if index is None else data[index]


def classical_find_misclassified(
    model: PerceptronModel,
    data: TrainingSet,
    delta: float,
    rng: np.random.Generator,
    ledger: QueryLedger,
) -> LabeledExample | None:
    """Uniform sampling baseline: draw ceil(n * ln(1/delta)) indices and check each.

    Every draw is charged one classical query whether or not a mistake turns
    up, so the cost is the same on success and on failure. If at least one
    example is misclassified the miss probability is (1 - 1/n)^k <= delta.
    """
    if model.dim != data.dim:
        raise ValueError(f"dimension mismatch: model {model.dim}, data {data.dim}")
    check_probability(delta, "delta")
    k = math.ceil(data.n * math.log(1.0 / delta))
    draws = rng.integers(0, data.n, size=k)
    ledger.charge_classical(k)
    mask = _mistake_mask(model.weights, data)
    hits = np.flatnonzero(mask[draws])
    if hits.size == 0:
        return None
    example = data[int(draws[hits[0]])]
    assert misclassifies(model, example)
    return example


def _initial_model(data: TrainingSet, initial_model: PerceptronModel | None) -> PerceptronModel:
    if initial_model is None:
        return PerceptronModel.zeros(data.dim)
    if initial_model.dim != data.dim:
        raise ValueError(
            f"dimension mismatch: initial model {initial_model.dim}, data {data.dim}"
        )
    return initial_model


def _train_online(
    data: TrainingSet,
    config: OnlineTrainConfig,
    find,
    initial_model: PerceptronModel | None = None,
) -> TrainReport:
    rng = np.random.default_rng(config.seed)
    ledger = QueryLedger()
    model = _initial_model(data, initial_model)
    delta = config.per_search_delta
    updates = 0
    converged = False
    while updates < config.max_updates:
        example = find(model, data, delta, rng, ledger)
        if example is None:
            converged = True
            break
        model = perceptron_update(model, example)
        updates += 1
    return TrainReport(model=model, updates_made=updates, converged=converged, ledger=ledger)


def train_online_quantum(
    data: TrainingSet,
    config: OnlineTrainConfig,
    initial_model: PerceptronModel | None = None,
) -> TrainReport:
    """Train by quantum mistake search; starts from the zero model by default."""

    def find(model, data, delta, rng, ledger):
        return quantum_find_misclassified(model, data, delta, config.c, rng, ledger)

    return _train_online(data, config, find, initial_model)


def train_online_classical(
    data: TrainingSet,
    config: OnlineTrainConfig,
    initial_model: PerceptronModel | None = None,
) -> TrainReport:
    """Train by uniform-sampling mistake search; starts from the zero model by default."""
    return _train_online(data, config, classical_find_misclassified, initial_model)


def train_online_streaming(
    data: TrainingSet,
    gamma_bound: float | None = None,
    initial_model: PerceptronModel | None = None,
) -> TrainReport:
    """Deterministic baseline: sweep the set in index order, fixing mistakes in place.

    Terminates on the first clean sweep. The sweep budget is
    ceil(1/gamma^2) + 1 when a margin bound is supplied, else a hard cap
    guards against non-separable input. Every example evaluation charges one
    classical query, so a run costs n * sweeps <= n * (updates + 1).
    """
    if gamma_bound is not None:
        check_probability(gamma_bound, "gamma_bound", inclusive_high=True)
        sweep_cap = math.ceil(1.0 / gamma_bound**2) + 1
    else:
        sweep_cap = _STREAMING_SWEEP_CAP
    ledger = QueryLedger()
    weights = _initial_model(data, initial_model).weights.copy()
    updates = 0
    converged = False
    for _ in range(sweep_cap):
        clean = True
        for i in range(data.n):
            ledger.charge_classical(1)
            if data.labels[i] * float(data.features[i] @ weights) <= 0.0:
                weights = weights + data.labels[i] * data.features[i]
                updates += 1
                clean = False
        if clean:
            converged = True
            break
    return TrainReport(
        model=PerceptronModel(weights),
        updates_made=updates,
        converged=converged,
        ledger=ledger,
    )
