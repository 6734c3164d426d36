"""Version-space training: search candidate hyperplanes instead of examples.

The dual view of the training problem: every labeled example cuts candidate
weight space with a half-space constraint, and any point satisfying all of
them (the version space) classifies the whole set correctly. Training then
reduces to drawing K Gaussian candidate hyperplanes and searching them for a
member of the version space, either by amplitude amplification over
candidate indices or classically by rejection sampling.

Membership of one candidate is an AND over all n constraints; the quantum
membership oracle is therefore costed at 2n elementary oracle queries per
application (compute and uncompute one constraint check per example), which
the ledger tracks via its composite counter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_growth_factor, check_probability
from .core import PerceptronModel, QueryLedger, TrainingSet
from .grover import GroverInstance, exponential_search
from .online import TrainReport, failure_rounds_for

__all__ = [
    "VersionSpaceEnsemble",
    "VSTrainConfig",
    "in_version_space",
    "margin_probability",
    "required_K",
    "sample_ensemble",
    "train_version_space_quantum",
    "train_version_space_classical",
]


class VersionSpaceEnsemble:
    """K candidate hyperplanes drawn i.i.d. from the standard normal.

    Candidates are kept unnormalized: membership in the version space is
    scale-invariant, so normalizing would be cosmetic.
    """

    def __init__(self, candidates, seed: int = 0):
        cands = np.array(candidates, dtype=np.float64, copy=True)
        if cands.ndim != 2 or cands.shape[0] < 1 or cands.shape[1] < 1:
            raise ValueError(
                f"candidates must be a (K, D) matrix with K, D >= 1, got shape {cands.shape}"
            )
        cands.setflags(write=False)
        self.candidates = cands
        self.seed = int(seed)

    @property
    def size(self) -> int:
        return self.candidates.shape[0]

    @property
    def dim(self) -> int:
        return self.candidates.shape[1]

    def __getitem__(self, index: int) -> np.ndarray:
        return self.candidates[int(index)]

    def __repr__(self) -> str:
        return f"VersionSpaceEnsemble(size={self.size}, dim={self.dim}, seed={self.seed})"


@dataclass(frozen=True)
class VSTrainConfig:
    """Knobs for the version-space trainers.

    ``gamma_bound`` sizes the ensemble via :func:`required_K` unless
    ``k_override`` pins K explicitly.
    """

    epsilon: float
    gamma_bound: float
    c: float = 1.5
    k_override: int | None = None
    seed: int = 0

    def __post_init__(self):
        check_probability(self.epsilon, "epsilon")
        check_probability(self.gamma_bound, "gamma_bound", inclusive_high=True)
        check_growth_factor(self.c)
        if self.k_override is not None and self.k_override < 1:
            raise ValueError(f"k_override must be positive, got {self.k_override}")


def in_version_space(
    weights, data: TrainingSet, ledger: QueryLedger | None = None
) -> bool:
    """True iff ``weights`` classifies every example strictly correctly.

    One call evaluates all n constraints; pass a ledger to charge the n
    classical queries when the call is an algorithm's verification step
    (leave it out for free post-hoc checks).
    """
    w = np.asarray(weights, dtype=np.float64)
    if w.ndim != 1 or w.shape[0] != data.dim:
        raise ValueError(
            f"dimension mismatch: weights shape {w.shape}, data dimension {data.dim}"
        )
    if ledger is not None:
        ledger.charge_classical(data.n)
    return bool(np.all(data.labels * (data.features @ w) > 0.0))


def margin_probability(gamma: float) -> float:
    """erf(gamma / sqrt(2)): probability mass of a standard normal within (-gamma, gamma).

    Used as the per-candidate version-space hit-rate estimate when sizing
    the ensemble; behaves as gamma * sqrt(2/pi) for small gamma.
    """
    check_probability(gamma, "gamma")
    return math.erf(gamma / math.sqrt(2.0))


def required_K(gamma: float, delta: float) -> int:
    """Ensemble size so that missing the version space ``K`` times has probability <= delta.

    ceil(ln(1/delta) / margin_probability(gamma)): if each draw lands in the
    version space with probability at least margin_probability(gamma), then
    (1 - p)^K <= exp(-p K) <= delta.
    """
    check_probability(delta, "delta")
    return math.ceil(math.log(1.0 / delta) / margin_probability(gamma))


def sample_ensemble(k: int, dim: int, seed: int) -> VersionSpaceEnsemble:
    """Draw K standard-normal candidates of dimension D, reproducible from seed.

    Normals come from numpy's seeded PCG64 generator via
    ``Generator.standard_normal`` (ziggurat transform); the seed is recorded
    on the ensemble so runs can state their sampling recipe.
    """
    if k < 1 or dim < 1:
        raise ValueError(f"need k >= 1 and dim >= 1, got k={k}, dim={dim}")
    rng = np.random.default_rng(seed)
    return VersionSpaceEnsemble(rng.standard_normal((int(k), int(dim))), seed=seed)


def _membership_mask(ensemble: VersionSpaceEnsemble, data: TrainingSet) -> np.ndarray:
    scores = (ensemble.candidates @ data.features.T) * data.labels
    return np.all(scores > 0.0, axis=1)


def train_version_space_quantum(
    data: TrainingSet,
    config: VSTrainConfig,
    ensemble: VersionSpaceEnsemble | None = None,
) -> TrainReport:
    """Search a Gaussian candidate ensemble for a version-space member by amplification.

    The failure budget epsilon is split evenly: the ensemble is sized so
    that it contains a member with probability >= 1 - epsilon/2, and the
    search misses an existing member with probability <= epsilon/2. Each
    amplification round applies the whole-dataset membership oracle (1
    composite query = 2n quantum queries); each measured candidate is
    verified classically with a full pass (n classical queries). Returns the
    verified candidate, or the zero model with ``converged=False`` if every
    round fails. ``updates_made`` counts classically verified candidates,
    the analogue of the mistake count for this trainer.

    Pass ``ensemble`` to search fixed candidates instead of sampling
    (``config.k_override`` then only applies when sampling).
    """
    if ensemble is None:
        k = config.k_override or required_K(config.gamma_bound, config.epsilon / 2.0)
        ensemble = sample_ensemble(k, data.dim, config.seed)
    elif ensemble.dim != data.dim:
        raise ValueError(
            f"dimension mismatch: ensemble dim {ensemble.dim}, data dim {data.dim}"
        )
    # measurements must not replay the bit stream that produced the candidates
    rng = np.random.default_rng(np.random.SeedSequence([config.seed & (2**63 - 1), 1]))
    ledger = QueryLedger()
    instance = GroverInstance(_membership_mask(ensemble, data))

    def verify(j: int) -> bool:
        return in_version_space(ensemble[j], data)

    index = exponential_search(
        instance,
        c=config.c,
        failure_rounds=failure_rounds_for(config.epsilon / 2.0),
        rng=rng,
        verify=verify,
        ledger=ledger,
        verify_cost=data.n,
        composite_data_size=data.n,
    )
    verified = ledger.classical_oracle_queries // data.n
    if index is None:
        model = PerceptronModel.zeros(data.dim)
        converged = False
    else:
        model = PerceptronModel(ensemble[index])
        converged = True
    return TrainReport(
        model=model, updates_made=verified, converged=converged, ledger=ledger
    )


def train_version_space_classical(
    data: TrainingSet, config: VSTrainConfig
) -> TrainReport:
    """Rejection sampling baseline: draw candidates one at a time, test each fully.

    Stops at the first version-space member or after
    required_K(gamma_bound, epsilon) draws (``k_override`` pins the budget
    instead when given). Each tested candidate costs n classical queries.
    """
    rng = np.random.default_rng(config.seed)
    ledger = QueryLedger()
    budget = config.k_override or required_K(config.gamma_bound, config.epsilon)
    tested = 0
    for _ in range(budget):
        candidate = rng.standard_normal(data.dim)
        tested += 1
        if in_version_space(candidate, data, ledger):
            return TrainReport(
                model=PerceptronModel(candidate),
                updates_made=tested,
                converged=True,
                ledger=ledger,
            )
    return TrainReport(
        model=PerceptronModel.zeros(data.dim),
        updates_made=tested,
        converged=False,
        ledger=ledger,
    )
