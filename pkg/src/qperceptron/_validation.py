"""Input validation helpers shared by the domain types and the estimators."""

from __future__ import annotations

import numpy as np

UNIT_NORM_ATOL = 1e-9


def as_float_vector(values, name: str = "vector") -> np.ndarray:
    """Coerce to a read-only 1-D float64 array, rejecting non-finite entries."""
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must not be empty")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    arr.setflags(write=False)
    return arr


def as_feature_matrix(values, name: str = "features") -> np.ndarray:
    """Coerce to a read-only 2-D float64 array of row vectors."""
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"{name} must have at least one row and one column")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    arr.setflags(write=False)
    return arr


def as_label_vector(values, n_rows: int, name: str = "labels") -> np.ndarray:
    """Coerce to a read-only vector of -1/+1 integer labels of length ``n_rows``."""
    arr = np.asarray(values)
    if arr.ndim != 1 or arr.shape[0] != n_rows:
        raise ValueError(
            f"{name} must be a vector of length {n_rows}, got shape {arr.shape}"
        )
    out = np.empty(n_rows, dtype=np.int64)
    for i, value in enumerate(arr):
        label = float(value)
        if label not in (-1.0, 1.0):
            raise ValueError(f"{name}[{i}] must be -1 or +1, got {value!r}")
        out[i] = int(label)
    out.setflags(write=False)
    return out


def check_unit_norms(matrix: np.ndarray, atol: float = UNIT_NORM_ATOL) -> None:
    """Require every row of ``matrix`` to have Euclidean norm 1 within ``atol``."""
    norms = np.linalg.norm(matrix, axis=1)
    bad = np.flatnonzero(np.abs(norms - 1.0) > atol)
    if bad.size:
        i = int(bad[0])
        raise ValueError(
            f"feature vector {i} has norm {norms[i]:.12g}; "
            f"unit norm is required within {atol:g} (renormalize before loading)"
        )


def check_probability(value: float, name: str, *, inclusive_high: bool = False) -> float:
    """Require ``value`` in (0, 1), optionally allowing 1."""
    value = float(value)
    ok = 0.0 < value < 1.0 or (inclusive_high and value == 1.0)
    if not ok:
        high = "1]" if inclusive_high else "1)"
        raise ValueError(f"{name} must lie in (0, {high}, got {value!r}")
    return value


def check_growth_factor(c: float) -> float:
    """Require the schedule growth factor to lie strictly inside (1, 2)."""
    c = float(c)
    if not 1.0 < c < 2.0:
        raise ValueError(f"growth factor c must lie in (1, 2), got {c!r}")
    return c
