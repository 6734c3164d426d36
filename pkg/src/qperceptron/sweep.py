"""Experiment sweeps: seeded runs over an axis, CSV records, exponent fits.

A sweep runs one algorithm over a grid of N or gamma values, ``trials``
times per grid point, on planted datasets whose seeds derive
deterministically from ``base_seed`` and the cell coordinates, so any
single cell can be reproduced in isolation and two executions of the same
spec emit identical records (wall time aside). Query counters are copied
verbatim from each run's ledger; :func:`fit_exponent` turns grouped medians
into a log-log slope, the package's way of quantifying scaling claims.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .core import TrainingSet
from .datagen import generate_margin_dataset
from .online import (
    OnlineTrainConfig,
    TrainReport,
    train_online_classical,
    train_online_quantum,
    train_online_streaming,
)
from .vspace import VSTrainConfig, train_version_space_classical, train_version_space_quantum

__all__ = [
    "ALGORITHM_TAGS",
    "SweepSpec",
    "RunRecord",
    "CSV_COLUMNS",
    "cell_seed",
    "run_algorithm",
    "run_sweep",
    "write_records_csv",
    "read_records_csv",
    "ExponentFit",
    "fit_exponent",
]

CSV_COLUMNS = [
    "algo",
    "axis",
    "axis_value",
    "trial",
    "seed",
    "N",
    "D",
    "gamma",
    "epsilon",
    "c",
    "updates",
    "converged",
    "q_queries",
    "c_queries",
    "g_queries",
    "wall_ms",
]


def _run_online_quantum(data, *, epsilon, gamma, c, seed, k_override):
    cfg = OnlineTrainConfig(epsilon=epsilon, gamma_bound=gamma, c=c, seed=seed)
    return train_online_quantum(data, cfg)


def _run_online_classical(data, *, epsilon, gamma, c, seed, k_override):
    cfg = OnlineTrainConfig(epsilon=epsilon, gamma_bound=gamma, c=c, seed=seed)
    return train_online_classical(data, cfg)


def _run_online_streaming(data, *, epsilon, gamma, c, seed, k_override):
    return train_online_streaming(data, gamma)


def _run_vspace_quantum(data, *, epsilon, gamma, c, seed, k_override):
    cfg = VSTrainConfig(
        epsilon=epsilon, gamma_bound=gamma, c=c, k_override=k_override, seed=seed
    )
    return train_version_space_quantum(data, cfg)


def _run_vspace_classical(data, *, epsilon, gamma, c, seed, k_override):
    cfg = VSTrainConfig(
        epsilon=epsilon, gamma_bound=gamma, c=c, k_override=k_override, seed=seed
    )
    return train_version_space_classical(data, cfg)


ALGORITHM_TAGS: dict[str, Callable[..., TrainReport]] = {
    "online-quantum": _run_online_quantum,
    "online-classical": _run_online_classical,
    "online-streaming": _run_online_streaming,
    "vspace-quantum": _run_vspace_quantum,
    "vspace-classical": _run_vspace_classical,
}


@dataclass(frozen=True)
class SweepSpec:
    """One algorithm swept along one axis; everything else held fixed."""

    algorithm: str
    axis: str
    axis_values: tuple
    n: int
    dim: int
    gamma: float
    epsilon: float
    c: float
    trials: int
    base_seed: int
    k_override: int | None = None

    def __post_init__(self):
        if self.algorithm not in ALGORITHM_TAGS:
            raise ValueError(
                f"unknown algorithm {self.algorithm!r}; "
                f"choose from {sorted(ALGORITHM_TAGS)}"
            )
        if self.axis not in ("N", "gamma"):
            raise ValueError(f"axis must be 'N' or 'gamma', got {self.axis!r}")
        values = tuple(self.axis_values)
        if not values:
            raise ValueError("axis_values must not be empty")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("axis_values must be strictly increasing")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        object.__setattr__(self, "axis_values", values)

    @classmethod
    def from_json_dict(cls, payload: dict) -> "SweepSpec":
        fixed = payload.get("fixed_params", {})
        return cls(
            algorithm=payload["algorithm"],
            axis=payload["axis"],
            axis_values=tuple(payload["axis_values"]),
            n=int(fixed["N"]),
            dim=int(fixed["D"]),
            gamma=float(fixed["gamma"]),
            epsilon=float(fixed["epsilon"]),
            c=float(fixed["c"]),
            trials=int(fixed["trials"]),
            base_seed=int(fixed["base_seed"]),
            k_override=(
                int(fixed["k_override"]) if fixed.get("k_override") is not None else None
            ),
        )

    @classmethod
    def from_json(cls, path) -> "SweepSpec":
        return cls.from_json_dict(json.loads(Path(path).read_text()))


@dataclass(frozen=True)
class RunRecord:
    """One row of sweep output; counters copied verbatim from the run's ledger."""

    algo: str
    axis: str
    axis_value: float
    trial: int
    seed: int
    n: int
    dim: int
    gamma: float
    epsilon: float
    c: float
    updates: int
    converged: bool
    q_queries: int
    c_queries: int
    g_queries: int
    wall_ms: float

    def csv_row(self) -> list[str]:
        axis_value = self.axis_value
        axis_str = repr(int(axis_value)) if self.axis == "N" else repr(axis_value)
        return [
            self.algo,
            self.axis,
            axis_str,
            str(self.trial),
            str(self.seed),
            str(self.n),
            str(self.dim),
            repr(self.gamma),
            repr(self.epsilon),
            repr(self.c),
            str(self.updates),
            "true" if self.converged else "false",
            str(self.q_queries),
            str(self.c_queries),
            str(self.g_queries),
            f"{self.wall_ms:.3f}",
        ]


def cell_seed(base_seed: int, axis_value, trial: int) -> int:
    """Stable per-cell seed: base_seed XOR a digest of (axis value, trial).

    Uses SHA-256 of a canonical text form, so the value is identical across
    platforms and sessions; each cell can be re-run on its own.
    """
    token = f"{float(axis_value)!r}:{int(trial)}".encode()
    digest = int.from_bytes(hashlib.sha256(token).digest()[:8], "big")
    return (int(base_seed) ^ digest) & (2**63 - 1)


def run_algorithm(
    algorithm: str,
    data: TrainingSet,
    *,
    epsilon: float,
    gamma: float,
    c: float,
    seed: int,
    k_override: int | None = None,
) -> TrainReport:
    """Dispatch one run by tag; unknown tags raise ValueError."""
    try:
        runner = ALGORITHM_TAGS[algorithm]
    except KeyError:
        raise ValueError(
            f"unknown algorithm {algorithm!r}; choose from {sorted(ALGORITHM_TAGS)}"
        ) from None
    return runner(
        data, epsilon=epsilon, gamma=gamma, c=c, seed=seed, k_override=k_override
    )


def run_sweep(spec: SweepSpec) -> list[RunRecord]:
    """Run every (axis value, trial) cell; records are ordered by axis then trial."""
    records = []
    for axis_value in spec.axis_values:
        n = int(axis_value) if spec.axis == "N" else spec.n
        gamma = float(axis_value) if spec.axis == "gamma" else spec.gamma
        for trial in range(spec.trials):
            seed = cell_seed(spec.base_seed, axis_value, trial)
            planted = generate_margin_dataset(n, spec.dim, gamma, seed)
            start = time.perf_counter()
            report = run_algorithm(
                spec.algorithm,
                planted.data,
                epsilon=spec.epsilon,
                gamma=gamma,
                c=spec.c,
                seed=cell_seed(seed, axis_value, trial + 1),
                k_override=spec.k_override,
            )
            wall_ms = round((time.perf_counter() - start) * 1e3, 3)
            records.append(
                RunRecord(
                    algo=spec.algorithm,
                    axis=spec.axis,
                    axis_value=float(axis_value),
                    trial=trial,
                    seed=seed,
                    n=n,
                    dim=spec.dim,
                    gamma=gamma,
                    epsilon=spec.epsilon,
                    c=spec.c,
                    updates=report.updates_made,
                    converged=report.converged,
                    q_queries=report.ledger.quantum_oracle_queries,
                    c_queries=report.ledger.classical_oracle_queries,
                    g_queries=report.ledger.composite_oracle_queries,
                    wall_ms=wall_ms,
                )
            )
    return records


def write_records_csv(records: Sequence[RunRecord], path) -> None:
    lines = [",".join(CSV_COLUMNS)]
    lines.extend(",".join(r.csv_row()) for r in records)
    Path(path).write_text("\n".join(lines) + "\n")


def read_records_csv(path) -> list[RunRecord]:
    text = Path(path).read_text().splitlines()
    if not text or text[0].split(",") != CSV_COLUMNS:
        raise ValueError(f"{path}: expected header {','.join(CSV_COLUMNS)}")
    records = []
    for line in text[1:]:
        if not line:
            continue
        f = line.split(",")
        records.append(
            RunRecord(
                algo=f[0],
                axis=f[1],
                axis_value=float(f[2]),
                trial=int(f[3]),
                seed=int(f[4]),
                n=int(f[5]),
                dim=int(f[6]),
                gamma=float(f[7]),
                epsilon=float(f[8]),
                c=float(f[9]),
                updates=int(f[10]),
                converged=f[11] == "true",
                q_queries=int(f[12]),
                c_queries=int(f[13]),
                g_queries=int(f[14]),
                wall_ms=float(f[15]),
            )
        )
    return records


@dataclass(frozen=True)
class ExponentFit:
    slope: float
    intercept: float
    r_squared: float


def fit_exponent(records: Sequence[RunRecord], x_field: str, y_field: str) -> ExponentFit:
    """Least squares on (ln x, ln median y) with y medians grouped by x value.

    Medians rather than means because randomized-schedule query counts are
    heavy tailed. Needs at least 3 distinct x values and strictly positive
    y everywhere.
    """
    if not records:
        raise ValueError("no records to fit")
    xs = np.array([getattr(r, x_field) for r in records], dtype=np.float64)
    ys = np.array([getattr(r, y_field) for r in records], dtype=np.float64)
    if np.any(ys <= 0.0) or np.any(xs <= 0.0):
        raise ValueError(f"log-log fit needs positive {x_field} and {y_field} values")
    groups = {}
    for x, y in zip(xs, ys):
        groups.setdefault(x, []).append(y)
    if len(groups) < 3:
        raise ValueError(f"need >= 3 distinct {x_field} values, got {len(groups)}")
    log_x = np.log(np.array(sorted(groups)))
    log_y = np.log(np.array([float(np.median(groups[x])) for x in sorted(groups)]))
    design = np.vstack([log_x, np.ones_like(log_x)]).T
    (slope, intercept), *_ = np.linalg.lstsq(design, log_y, rcond=None)
    predicted = design @ np.array([slope, intercept])
    ss_res = float(np.sum((log_y - predicted) ** 2))
    ss_tot = float(np.sum((log_y - log_y.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return ExponentFit(slope=float(slope), intercept=float(intercept), r_squared=r_squared)
