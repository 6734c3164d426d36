"""Built-in verification suites behind the ``verify`` CLI subcommand.

Each suite returns (name, passed, detail); they re-derive expectations from
first principles (brute-force state vectors, direct averages, exhaustive
margin checks) rather than trusting the code paths they exercise.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .core import margin
from .datagen import generate_margin_dataset
from .grover import (
    GroverInstance,
    grover_angle,
    mean_success_probability,
    statevector_reference,
    success_probability,
)
from .online import (
    OnlineTrainConfig,
    train_online_classical,
    train_online_quantum,
    train_online_streaming,
)

__all__ = ["SUITES", "run_suites"]

_EXACTNESS_TOL = 1e-10


def check_grover_exactness(
    n_values=range(2, 65), max_iterations: int = 16
) -> tuple[bool, str]:
    """Brute-force reflections vs the closed form, across a dense (N, k, m) grid."""
    worst = 0.0
    for n in n_values:
        for k in range(n + 1):
            mask = np.zeros(n, dtype=bool)
            mask[:k] = True
            instance = GroverInstance(mask)
            theta = grover_angle(k, n)
            for m in range(max_iterations + 1):
                probs = statevector_reference(instance, m)
                gap = abs(float(probs[mask].sum()) - success_probability(theta, m))
                worst = max(worst, gap)
                if gap > _EXACTNESS_TOL:
                    return False, (
                        f"N={n} k={k} m={m}: statevector mass differs from "
                        f"closed form by {gap:.3e} (> {_EXACTNESS_TOL:g})"
                    )
    return True, f"max |statevector - closed form| = {worst:.3e}"


def check_mean_probability_bound(
    theta_grid=None, tol: float = _EXACTNESS_TOL
) -> tuple[bool, str]:
    """Averaged success probability: >= 1/4 at M = ceil(1/sin(2 theta)), and equal
    to the direct average."""
    if theta_grid is None:
        theta_grid = [round(0.01 * i, 2) for i in range(1, 151)]
    worst_gap, worst_value = 0.0, 1.0
    for theta in theta_grid:
        m = math.ceil(1.0 / math.sin(2.0 * theta))
        value = mean_success_probability(theta, m)
        direct = sum(success_probability(theta, j) for j in range(m)) / m
        worst_gap = max(worst_gap, abs(value - direct))
        worst_value = min(worst_value, value)
        if abs(value - direct) > tol:
            return False, f"theta={theta}: closed form vs direct average differ by {abs(value - direct):.3e}"
        if value < 0.25:
            return False, f"theta={theta}: averaged probability {value:.6f} < 1/4"
    return True, (
        f"min averaged probability {worst_value:.6f}, "
        f"max |closed - direct| = {worst_gap:.3e}"
    )


def check_mistake_bounds(
    n_datasets: int = 20, n: int = 256, dim: int = 8, gamma: float = 0.2
) -> tuple[bool, str]:
    """All online trainers stay within ceil(1/gamma^2) updates and separate."""
    budget = math.ceil(1.0 / gamma**2)
    epsilon = 1e-3
    trainers: list[tuple[str, Callable]] = [
        ("online-quantum", lambda d, s: train_online_quantum(
            d, OnlineTrainConfig(epsilon=epsilon, gamma_bound=gamma, seed=s))),
        ("online-classical", lambda d, s: train_online_classical(
            d, OnlineTrainConfig(epsilon=epsilon, gamma_bound=gamma, seed=s))),
        ("online-streaming", lambda d, s: train_online_streaming(d, gamma)),
    ]
    max_updates = 0
    for seed in range(n_datasets):
        planted = generate_margin_dataset(n, dim, gamma, seed=9000 + seed)
        for tag, train in trainers:
            report = train(planted.data, seed)
            max_updates = max(max_updates, report.updates_made)
            if report.updates_made > budget:
                return False, (
                    f"{tag} seed={seed}: {report.updates_made} updates "
                    f"exceed the budget {budget}"
                )
            if report.converged:
                if np.linalg.norm(report.model.weights) == 0.0:
                    return False, f"{tag} seed={seed}: converged with the zero model"
                if margin(planted.data, report.model) <= 0.0:
                    return False, f"{tag} seed={seed}: converged but does not separate"
            elif tag == "online-streaming":
                return False, f"{tag} seed={seed}: did not converge"
    return True, f"{n_datasets} datasets x 3 trainers, max updates {max_updates} <= {budget}"


SUITES: dict[str, Callable[[], tuple[bool, str]]] = {
    "grover-exactness": check_grover_exactness,
    "mean-probability-bound": check_mean_probability_bound,
    "mistake-bounds": check_mistake_bounds,
}


def run_suites(report=print) -> bool:
    """Run every suite, report one line each, return overall success."""
    all_ok = True
    for name, suite in SUITES.items():
        ok, detail = suite()
        report(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        all_ok = all_ok and ok
    return all_ok
