"""Synthetic linearly separable datasets with an exact planted margin.

Every example is built as phi = y*s*w_star + sqrt(1-s^2)*v with v a random
unit direction orthogonal to the planted separator w_star and s drawn from
[gamma, 1], so phi is exactly unit norm and its signed score against w_star
is exactly s >= gamma. The construction is deterministic from the seed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._validation import check_probability
from .core import PerceptronModel, TrainingSet, margin
from .online import train_online_streaming

__all__ = [
    "PlantedDataset",
    "generate_margin_dataset",
    "measure_empirical_margin",
    "save_dataset",
    "load_dataset",
]

NORMAL_SAMPLING_NOTE = "numpy PCG64 Generator.standard_normal (ziggurat)"


@dataclass(frozen=True)
class PlantedDataset:
    """A training set together with the separator it was built around."""

    data: TrainingSet
    w_star: np.ndarray
    gamma_planted: float
    seed: int

    def __post_init__(self):
        w = np.array(self.w_star, dtype=np.float64, copy=True)
        w.setflags(write=False)
        object.__setattr__(self, "w_star", w)


def _unit_rows(rng: np.random.Generator, n: int, dim: int) -> np.ndarray:
    rows = rng.standard_normal((n, dim))
    norms = np.linalg.norm(rows, axis=1, keepdims=True)
    # a zero draw has probability zero; redraw defensively anyway
    while np.any(norms < 1e-12):
        bad = norms[:, 0] < 1e-12
        rows[bad] = rng.standard_normal((int(bad.sum()), dim))
        norms = np.linalg.norm(rows, axis=1, keepdims=True)
    return rows / norms


def generate_margin_dataset(
    n: int,
    dim: int,
    gamma: float,
    seed: int,
    *,
    pin_to_margin: bool = False,
) -> PlantedDataset:
    """Plant a separator and emit ``n`` unit examples with margin >= ``gamma``.

    Labels are uniform but resampled until both classes appear (for n >= 2).
    By default each example's score s is uniform on [gamma, 1];
    ``pin_to_margin`` pins s = gamma for every example, the hardest instance
    this construction can produce.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if dim < 2:
        raise ValueError(f"dim must be at least 2 so an orthogonal direction exists, got {dim}")
    check_probability(gamma, "gamma")

    rng = np.random.default_rng(seed)
    w_star = _unit_rows(rng, 1, dim)[0]
    labels = rng.choice(np.array([-1, 1]), size=n)
    while np.all(labels == labels[0]):
        labels = rng.choice(np.array([-1, 1]), size=n)
    if pin_to_margin:
        s = np.full(n, gamma)
    else:
        s = rng.uniform(gamma, 1.0, size=n)
    raw = rng.standard_normal((n, dim))
    ortho = raw - np.outer(raw @ w_star, w_star)
    norms = np.linalg.norm(ortho, axis=1, keepdims=True)
    while np.any(norms < 1e-12):
        bad = norms[:, 0] < 1e-12
        fresh = rng.standard_normal((int(bad.sum()), dim))
        ortho[bad] = fresh - np.outer(fresh @ w_star, w_star)
        norms = np.linalg.norm(ortho, axis=1, keepdims=True)
    ortho = ortho / norms

    features = (labels * s)[:, None] * w_star + np.sqrt(1.0 - s**2)[:, None] * ortho
    data = TrainingSet(features, labels)
    return PlantedDataset(data=data, w_star=w_star, gamma_planted=gamma, seed=int(seed))


def measure_empirical_margin(
    data: TrainingSet,
    w_star=None,
    n_probes: int = 10_000,
    seed: int = 0,
) -> float:
    """Lower-bound estimate of the best achievable margin on ``data``.

    Takes the best of (a) the planted separator when supplied, (b) the
    streaming perceptron's solution, and (c) random unit probes. This is a
    diagnostic, not the exact maximum margin (which would need a quadratic
    program); a nonpositive value means no probed direction separates.
    """
    candidates = []
    if w_star is not None:
        candidates.append(np.asarray(w_star, dtype=np.float64))
    report = train_online_streaming(data)
    if np.linalg.norm(report.model.weights) > 0.0:
        candidates.append(report.model.weights)
    rng = np.random.default_rng(seed)
    probes = _unit_rows(rng, n_probes, data.dim)
    best = -math.inf
    for w in candidates:
        best = max(best, margin(data, PerceptronModel(w)))
    scores = (probes @ data.features.T) * data.labels
    probe_margins = scores.min(axis=1)  # probes are unit norm already
    best = max(best, float(probe_margins.max()))
    return best


def save_dataset(dataset: PlantedDataset, path) -> Path:
    """Write the examples as CSV plus a generator-metadata sidecar JSON.

    Returns the sidecar path, which sits next to the CSV as
    ``<stem>.meta.json``.
    """
    path = Path(path)
    dataset.data.to_csv(path)
    sidecar = path.with_suffix(".meta.json")
    sidecar.write_text(
        json.dumps(
            {
                "n": dataset.data.n,
                "dim": dataset.data.dim,
                "gamma": dataset.gamma_planted,
                "seed": dataset.seed,
                "w_star": [float(v) for v in dataset.w_star],
                "normal_sampling": NORMAL_SAMPLING_NOTE,
            },
            indent=2,
        )
    )
    return sidecar


def load_dataset(path) -> PlantedDataset:
    """Read a CSV dataset and its sidecar back into a :class:`PlantedDataset`."""
    path = Path(path)
    data = TrainingSet.from_csv(path)
    sidecar = path.with_suffix(".meta.json")
    if not sidecar.exists():
        raise FileNotFoundError(f"missing sidecar {sidecar}")
    meta = json.loads(sidecar.read_text())
    return PlantedDataset(
        data=data,
        w_star=np.asarray(meta["w_star"], dtype=np.float64),
        gamma_planted=float(meta["gamma"]),
        seed=int(meta["seed"]),
    )
