"""Quantum-search perceptron training, exactly simulated at the amplitude level.

Two training strategies built on amplitude amplification (searching the
examples for mistakes, and searching Gaussian candidate hyperplanes for a
consistent one), plus their classical baselines, planted-margin dataset
generation, per-run oracle-query accounting, and a sweep harness that fits
empirical query-complexity exponents.
"""

from .core import (
    LabeledExample,
    PerceptronModel,
    QueryLedger,
    TrainingSet,
    margin,
    misclassifies,
    perceptron_update,
)
from .datagen import PlantedDataset, generate_margin_dataset, measure_empirical_margin
from .estimators import (
    QuantumPerceptron,
    QuantumVersionSpacePerceptron,
    SamplingPerceptron,
    SamplingVersionSpacePerceptron,
    StreamingPerceptron,
)
from .grover import (
    GroverInstance,
    MeasurementOutcome,
    deterministic_boost,
    exponential_search,
    grover_angle,
    mean_success_probability,
    run_grover,
    statevector_reference,
    success_probability,
)
from .online import (
    OnlineTrainConfig,
    TrainReport,
    classical_find_misclassified,
    quantum_find_misclassified,
    train_online_classical,
    train_online_quantum,
    train_online_streaming,
)
from .sweep import RunRecord, SweepSpec, fit_exponent, run_sweep
from .vspace import (
    VersionSpaceEnsemble,
    VSTrainConfig,
    in_version_space,
    margin_probability,
    required_K,
    sample_ensemble,
    train_version_space_classical,
    train_version_space_quantum,
)

__version__ = "0.1.0"

__all__ = [
    "LabeledExample",
    "TrainingSet",
    "PerceptronModel",
    "QueryLedger",
    "misclassifies",
    "perceptron_update",
    "margin",
    "GroverInstance",
    "MeasurementOutcome",
    "grover_angle",
    "success_probability",
    "mean_success_probability",
    "run_grover",
    "statevector_reference",
    "deterministic_boost",
    "exponential_search",
    "OnlineTrainConfig",
    "TrainReport",
    "quantum_find_misclassified",
    "classical_find_misclassified",
    "train_online_quantum",
    "train_online_classical",
    "train_online_streaming",
    "VersionSpaceEnsemble",
    "VSTrainConfig",
    "in_version_space",
    "margin_probability",
    "required_K",
    "sample_ensemble",
    "train_version_space_quantum",
    "train_version_space_classical",
    "PlantedDataset",
    "generate_margin_dataset",
    "measure_empirical_margin",
    "SweepSpec",
    "RunRecord",
    "run_sweep",
    "fit_exponent",
    "QuantumPerceptron",
    "SamplingPerceptron",
    "StreamingPerceptron",
    "QuantumVersionSpacePerceptron",
    "SamplingVersionSpacePerceptron",
    "__version__",
]
