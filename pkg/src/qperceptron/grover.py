"""Exact amplitude-level simulation of search by amplitude amplification.

Starting from the uniform superposition over ``N`` items, each amplification
round applies the sign-flip oracle for the marked set followed by reflection
about the initial state. Because the state stays inside the two-dimensional
span of (initial state, marked projection) with uniform amplitudes inside
the marked and unmarked subsets, the outcome distribution after ``m`` rounds
is known in closed form: a marked item is measured with probability
``sin^2((2m+1) * theta)`` where ``theta = asin(sqrt(k/N))``, and items are
uniform within each subset. :func:`run_grover` samples that distribution
directly, which is exact and O(1) per call; :func:`statevector_reference`
implements the two reflections literally on a length-N state vector and
exists as a brute-force test oracle for the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ._validation import check_growth_factor
from .core import QueryLedger

__all__ = [
    "GroverInstance",
    "MeasurementOutcome",
    "grover_angle",
    "success_probability",
    "mean_success_probability",
    "run_grover",
    "statevector_reference",
    "deterministic_boost",
    "exponential_search",
    "inner_loop_depth",
    "STATEVECTOR_MAX_ITEMS",
]

STATEVECTOR_MAX_ITEMS = 2**16

_HALF_PI = math.pi / 2.0


class GroverInstance:
    """A uniform-superposition search problem: N items, some of them marked.

    Construct from a boolean mask over 0-based item indices, or from a
    predicate via :meth:`from_predicate`. The marked count is computed once;
    the simulator is omniscient about it (cost accounting happens in the
    ledger, not here).
    """

    def __init__(self, marked_mask):
        mask = np.array(marked_mask, dtype=bool, copy=True)
        if mask.ndim != 1 or mask.size == 0:
            raise ValueError(f"marked_mask must be a nonempty vector, got shape {mask.shape}")
        mask.setflags(write=False)
        self._mask = mask
        self._num_marked = int(mask.sum())
        self._marked_idx: Optional[np.ndarray] = None
        self._unmarked_idx: Optional[np.ndarray] = None

    @classmethod
    def from_predicate(cls, num_items: int, predicate: Callable[[int], bool]) -> "GroverInstance":
        if num_items < 1:
            raise ValueError(f"num_items must be positive, got {num_items}")
        return cls([bool(predicate(i)) for i in range(num_items)])

    @property
    def num_items(self) -> int:
        return self._mask.shape[0]

    @property
    def num_marked(self) -> int:
        return self._num_marked

    @property
    def marked_mask(self) -> np.ndarray:
        return self._mask

    def marked(self, index: int) -> bool:
        return bool(self._mask[index])

    @property
    def angle(self) -> float:
        return grover_angle(self._num_marked, self.num_items)

    def _indices(self, marked: bool) -> np.ndarray:
        if marked:
            if self._marked_idx is None:
                self._marked_idx = np.flatnonzero(self._mask)
            return self._marked_idx
        if self._unmarked_idx is None:
            self._unmarked_idx = np.flatnonzero(~self._mask)
        return self._unmarked_idx

    def __repr__(self) -> str:
        return f"GroverInstance(num_items={self.num_items}, num_marked={self.num_marked})"


@dataclass(frozen=True)
class MeasurementOutcome:
    """One simulated measurement: the 0-based item index that was observed."""

    index: int
    was_marked: bool
    iterations_used: int


def grover_angle(num_marked: int, num_items: int) -> float:
    """Rotation angle asin(sqrt(k/N)) in radians, in [0, pi/2]."""
    if num_items < 1:
        raise ValueError(f"num_items must be positive, got {num_items}")
    if not 0 <= num_marked <= num_items:
        raise ValueError(
            f"num_marked must lie in [0, {num_items}], got {num_marked}"
        )
    return math.asin(math.sqrt(num_marked / num_items))


def success_probability(theta: float, iterations: int) -> float:
    """Probability sin^2((2m+1) * theta) of measuring a marked item after m rounds."""
    if iterations < 0:
        raise ValueError(f"iterations must be nonnegative, got {iterations}")
    return math.sin((2 * iterations + 1) * theta) ** 2


def mean_success_probability(theta: float, schedule_size: int) -> float:
    """Average of the success probability over iteration counts 0..M-1.

    Closed form (1/2)(1 - sin(4*M*theta) / (2*M*sin(2*theta))); at the
    endpoints theta = 0 and theta = pi/2 the closed form is 0/0 and the
    direct average (0 and 1 respectively) is returned instead. Whenever
    M >= 1/sin(2*theta) the value is at least 1/4.
    """
    m = int(schedule_size)
    if m < 1:
        raise ValueError(f"schedule_size must be positive, got {schedule_size}")
    if theta == 0.0:
        return 0.0
    if theta == _HALF_PI:
        return 1.0
    denom = 2.0 * m * math.sin(2.0 * theta)
    return 0.5 * (1.0 - math.sin(4.0 * m * theta) / denom)


def run_grover(
    instance: GroverInstance,
    iterations: int,
    rng: np.random.Generator,
    ledger: QueryLedger | None = None,
    *,
    composite_data_size: int | None = None,
) -> MeasurementOutcome:
    """Apply ``iterations`` amplification rounds and measure once.

    Samples the exact outcome distribution: marked with probability
    sin^2((2m+1)*theta), uniform within the marked/unmarked subsets.
    Charges ``iterations`` oracle queries to the ledger; when
    ``composite_data_size`` is given each round is a whole-dataset
    membership oracle instead, charged as 1 composite query plus
    ``2 * composite_data_size`` quantum queries.
    """
    if iterations < 0:
        raise ValueError(f"iterations must be nonnegative, got {iterations}")
    if ledger is not None:
        if composite_data_size is None:
            ledger.charge_quantum(iterations)
        else:
            ledger.charge_composite(iterations, composite_data_size)

    k, n = instance.num_marked, instance.num_items
    if k == 0:
        hit = False
    elif k == n:
        hit = True
    else:
        hit = rng.random() < success_probability(instance.angle, iterations)
    pool = instance._indices(hit)
    index = int(pool[rng.integers(pool.shape[0])])
    return MeasurementOutcome(index=index, was_marked=hit, iterations_used=iterations)


def statevector_reference(instance: GroverInstance, iterations: int) -> np.ndarray:
    """Outcome distribution computed by applying the two reflections literally.

    Starts from the uniform state vector, applies (reflect about initial
    state) o (flip sign of marked entries) ``iterations`` times, and returns
    the squared amplitudes. Brute force: O(N) per round, capped at
    N = 2^16 items. This is the test oracle for the closed-form path.
    """
    if iterations < 0:
        raise ValueError(f"iterations must be nonnegative, got {iterations}")
    n = instance.num_items
    if n > STATEVECTOR_MAX_ITEMS:
        raise ValueError(
            f"statevector reference is capped at {STATEVECTOR_MAX_ITEMS} items, got {n}"
        )
    psi = np.full(n, 1.0 / math.sqrt(n))
    state = psi.copy()
    mask = instance.marked_mask
    for _ in range(iterations):
        state = np.where(mask, -state, state)
        state = 2.0 * psi * float(psi @ state) - state
    return state**2


def deterministic_boost(success_probability_in: float) -> tuple[int, float]:
    """Dilute a known success probability so amplification becomes exact.

    Returns ``(j, q)`` with ``j`` the smallest positive iteration count and
    ``q`` a Bernoulli parameter such that requiring an auxiliary q-coin to
    come up heads scales the success probability to exactly
    sin^2(pi / (2*(2j+1))), from which ``j`` amplification rounds succeed
    with certainty.
    """
    a = float(success_probability_in)
    if not 0.0 < a <= 1.0:
        raise ValueError(f"success probability must lie in (0, 1], got {a!r}")
    # smallest j with sin^2(pi / (2(2j+1))) <= a, i.e. 2j+1 >= pi / (2 asin(sqrt(a)));
    # step around the closed-form j to absorb floating-point edge cases
    j = max(1, math.ceil((math.pi / (2.0 * math.asin(math.sqrt(a))) - 1.0) / 2.0))
    while j > 1 and math.sin(math.pi / (2.0 * (2 * (j - 1) + 1))) ** 2 <= a:
        j -= 1
    while (target := math.sin(math.pi / (2.0 * (2 * j + 1))) ** 2) > a:
        j += 1
    return j, target / a


def inner_loop_depth(num_items: int, c: float) -> int:
    """Number of schedule steps ceil(log_c(1 / sin(2 asin(1/sqrt(N))))).

    This budgets the geometric ramp for the worst case of a single marked
    item. The formula yields 0 for N = 2 (the loop would be empty) and
    blows up on floating-point noise at N = 1, so the result is clamped to
    at least one step; for N >= 3 it equals the formula exactly.
    """
    if num_items < 1:
        raise ValueError(f"num_items must be positive, got {num_items}")
    c = check_growth_factor(c)
    if num_items == 1:
        return 1
    worst_angle = math.asin(1.0 / math.sqrt(num_items))
    m0 = 1.0 / math.sin(2.0 * worst_angle)
    return max(1, math.ceil(math.log(m0) / math.log(c)))


def exponential_search(
    instance: GroverInstance,
    *,
    c: float,
    failure_rounds: int,
    rng: np.random.Generator,
    verify: Callable[[int], bool],
    ledger: QueryLedger | None = None,
    verify_cost: int = 1,
    composite_data_size: int | None = None,
) -> int | None:
    """Search with a geometric iteration schedule when the marked count is unknown.

    Runs ``failure_rounds`` passes over schedule steps j = 1..J (J from
    :func:`inner_loop_depth`); each step draws the round count m uniformly
    from {0, ..., ceil(c^j)}, runs the amplification, then verifies the
    measured index classically at ``verify_cost`` classical queries per
    check. Returns the first index that verifies, or None if every round
    fails. Once the schedule reaches m >= 1/sin(2*theta), each full pass
    finds a marked item with probability at least 1/4, so with k marked
    items present the miss probability is at most (3/4)^failure_rounds.

    ``verify`` must agree with the instance's marking; it exists so the
    caller's classical check is genuinely re-evaluated (and charged) rather
    than trusted from the simulator's bookkeeping.
    """
    c = check_growth_factor(c)
    if failure_rounds < 1:
        raise ValueError(f"failure_rounds must be positive, got {failure_rounds}")
    if verify_cost < 1:
        raise ValueError(f"verify_cost must be positive, got {verify_cost}")
    depth = inner_loop_depth(instance.num_items, c)
    for _ in range(failure_rounds):
        for j in range(1, depth + 1):
            high = math.ceil(c**j)
            m = int(rng.integers(0, high + 1))
            outcome = run_grover(
                instance, m, rng, ledger, composite_data_size=composite_data_size
            )
            if ledger is not None:
                ledger.charge_classical(verify_cost)
            if verify(outcome.index):
                return outcome.index
    return None
