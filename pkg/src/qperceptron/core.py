"""Domain types shared by every trainer.

Labeled unit vectors, ordered training sets, perceptron weight vectors, and
the query ledger that counts oracle calls (the unit of cost for every
algorithm in this package). All types except :class:`QueryLedger` are
immutable after construction and safe to share across threads; a ledger
belongs to a single run.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from ._validation import (
    UNIT_NORM_ATOL,
    as_feature_matrix,
    as_float_vector,
    as_label_vector,
    check_unit_norms,
)

__all__ = [
    "LabeledExample",
    "TrainingSet",
    "PerceptronModel",
    "QueryLedger",
    "misclassifies",
    "perceptron_update",
    "margin",
]


@dataclass(frozen=True)
class LabeledExample:
    """One training example: a unit feature vector with a -1/+1 label."""

    features: np.ndarray
    label: int

    def __post_init__(self):
        features = as_float_vector(self.features, "features")
        norm = float(np.linalg.norm(features))
        if abs(norm - 1.0) > UNIT_NORM_ATOL:
            raise ValueError(
                f"features must be unit norm within {UNIT_NORM_ATOL:g}, "
                f"got norm {norm:.12g}"
            )
        if self.label not in (-1, 1):
            raise ValueError(f"label must be -1 or +1, got {self.label!r}")
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "label", int(self.label))

    @property
    def dim(self) -> int:
        return self.features.shape[0]


class TrainingSet:
    """Ordered, immutable collection of labeled unit vectors.

    The index order is part of the contract: retrieval-by-index is the
    classical data-access primitive, so two sets with the same examples in
    different orders are different objects.
    """

    def __init__(self, features, labels):
        x = as_feature_matrix(features, "features")
        check_unit_norms(x)
        y = as_label_vector(labels, x.shape[0], "labels")
        self._x = x
        self._y = y

    @classmethod
    def from_examples(cls, examples: Sequence[LabeledExample]) -> "TrainingSet":
        if not examples:
            raise ValueError("examples must not be empty")
        return cls(
            np.stack([e.features for e in examples]),
            [e.label for e in examples],
        )

    @property
    def n(self) -> int:
        return self._x.shape[0]

    @property
    def dim(self) -> int:
        return self._x.shape[1]

    @property
    def features(self) -> np.ndarray:
        """Read-only (n, dim) feature matrix."""
        return self._x

    @property
    def labels(self) -> np.ndarray:
        """Read-only length-n vector of -1/+1 labels."""
        return self._y

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, index: int) -> LabeledExample:
        i = int(index)
        if not 0 <= i < self.n:
            raise IndexError(f"index {index} out of range for {self.n} examples")
        return LabeledExample(self._x[i], int(self._y[i]))

    def __iter__(self) -> Iterator[LabeledExample]:
        for i in range(self.n):
            yield self[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrainingSet):
            return NotImplemented
        return np.array_equal(self._x, other._x) and np.array_equal(self._y, other._y)

    def __repr__(self) -> str:
        return f"TrainingSet(n={self.n}, dim={self.dim})"

    # -- serialization --------------------------------------------------

    def to_csv(self, path) -> None:
        """Write one row per example: columns f_1..f_D then label, with header."""
        path = Path(path)
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow([f"f_{j + 1}" for j in range(self.dim)] + ["label"])
            for i in range(self.n):
                writer.writerow([repr(float(v)) for v in self._x[i]] + [int(self._y[i])])

    @classmethod
    def from_csv(cls, path) -> "TrainingSet":
        path = Path(path)
        with path.open(newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if not header or header[-1] != "label":
                raise ValueError(f"{path}: expected header f_1..f_D,label")
            dim = len(header) - 1
            rows, labels = [], []
            for row in reader:
                if len(row) != dim + 1:
                    raise ValueError(f"{path}: row has {len(row)} fields, expected {dim + 1}")
                rows.append([float(v) for v in row[:dim]])
                labels.append(int(float(row[dim])))
        if not rows:
            raise ValueError(f"{path}: no examples")
        return cls(rows, labels)

    def to_json_dict(self) -> dict:
        """Compact JSON form: {"dim": D, "examples": [{"phi": [...], "y": +-1}]}."""
        return {
            "dim": self.dim,
            "examples": [
                {"phi": [float(v) for v in self._x[i]], "y": int(self._y[i])}
                for i in range(self.n)
            ],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "TrainingSet":
        examples = payload.get("examples")
        if not examples:
            raise ValueError("JSON payload has no examples")
        dim = int(payload["dim"])
        rows = []
        labels = []
        for entry in examples:
            phi = entry["phi"]
            if len(phi) != dim:
                raise ValueError(f"example has dimension {len(phi)}, expected {dim}")
            rows.append(phi)
            labels.append(entry["y"])
        return cls(rows, labels)

    def to_json(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json_dict()))

    @classmethod
    def from_json(cls, path) -> "TrainingSet":
        return cls.from_json_dict(json.loads(Path(path).read_text()))


@dataclass(frozen=True)
class PerceptronModel:
    """A linear classifier: raw, unnormalized weight vector (zero allowed)."""

    weights: np.ndarray

    def __post_init__(self):
        weights = np.array(self.weights, dtype=np.float64, copy=True)
        if weights.ndim != 1 or weights.size == 0:
            raise ValueError(f"weights must be a nonempty vector, got shape {weights.shape}")
        if not np.all(np.isfinite(weights)):
            raise ValueError("weights contain non-finite values")
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def zeros(cls, dim: int) -> "PerceptronModel":
        return cls(np.zeros(int(dim)))

    @property
    def dim(self) -> int:
        return self.weights.shape[0]


@dataclass
class QueryLedger:
    """Monotone counters for oracle calls, the unit of cost for every run.

    ``quantum_oracle_queries`` counts sign-flip oracle applications,
    ``classical_oracle_queries`` counts concrete example evaluations, and
    ``composite_oracle_queries`` counts whole-dataset membership oracles,
    each of which also costs ``2 * n_examples`` quantum queries (charged
    automatically by :meth:`charge_composite`).
    """

    quantum_oracle_queries: int = 0
    classical_oracle_queries: int = 0
    composite_oracle_queries: int = 0

    def charge_quantum(self, count: int) -> None:
        self._check(count)
        self.quantum_oracle_queries += int(count)

    def charge_classical(self, count: int) -> None:
        self._check(count)
        self.classical_oracle_queries += int(count)

    def charge_composite(self, count: int, n_examples: int) -> None:
        """Charge ``count`` composite queries, each costing 2*n_examples quantum ones."""
        self._check(count)
        if n_examples < 1:
            raise ValueError(f"n_examples must be positive, got {n_examples}")
        self.composite_oracle_queries += int(count)
        self.quantum_oracle_queries += 2 * int(n_examples) * int(count)

    @staticmethod
    def _check(count: int) -> None:
        if count < 0:
            raise ValueError(f"counts are monotone; cannot charge {count}")

    def as_dict(self) -> dict:
        return {
            "quantum_oracle_queries": self.quantum_oracle_queries,
            "classical_oracle_queries": self.classical_oracle_queries,
            "composite_oracle_queries": self.composite_oracle_queries,
        }


def _check_dims(model: PerceptronModel, example: LabeledExample) -> None:
    if model.dim != example.dim:
        raise ValueError(
            f"dimension mismatch: model has {model.dim}, example has {example.dim}"
        )


def misclassifies(model: PerceptronModel, example: LabeledExample) -> bool:
    """True iff the model gets the example wrong; ties (score 0) are mistakes.

    Correctness requires a strictly positive signed score, so the zero model
    misclassifies everything.
    """
    _check_dims(model, example)
    return bool(example.label * float(model.weights @ example.features) <= 0.0)


def perceptron_update(model: PerceptronModel, example: LabeledExample) -> PerceptronModel:
    """Return the additively corrected model w + y*phi; the input is untouched."""
    _check_dims(model, example)
    return PerceptronModel(model.weights + example.label * example.features)


def margin(data: TrainingSet, model: PerceptronModel) -> float:
    """Smallest normalized signed score min_i y_i <w, phi_i> / ||w||.

    Positive means ``model`` separates the data; the weight vector must be
    nonzero for the normalization to exist.
    """
    if model.dim != data.dim:
        raise ValueError(
            f"dimension mismatch: model has {model.dim}, data has {data.dim}"
        )
    norm = float(np.linalg.norm(model.weights))
    if norm == 0.0:
        raise ValueError("margin is undefined for the zero weight vector")
    scores = data.labels * (data.features @ model.weights)
    return float(scores.min() / norm)
