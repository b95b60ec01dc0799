"""Near-resonant Rabi dynamics of anharmonic superconducting qubits.

Closed-form and numerically exact results for a weakly driven three-level
system, a fluxonium spectrum solver for the underlying device parameters,
a coherent-error model of a microwave-activated CZ gate, and a two-stage
slope-fit pipeline for synthetic Rabi data.  Frequencies are linear
frequencies in GHz, times in ns.
"""

from .analytic import (
    CubicInvariants,
    InternalConsistencyError,
    RabiBranch,
    RabiSolution,
    cubic_invariants,
    eigenvalue_gaps,
    eigenvalues,
    rabi_approx,
    rabi_exact,
    rabi_solution,
    slope,
    slope_gradient,
    stark_shift,
    verify_cubic_identity,
)
from .core import (
    REGIME_THRESHOLD,
    DegenerateParameterError,
    ThreeLevelParams,
    build_hamiltonian,
)
from .dynamics import (
    NoOscillationError,
    TimeSeries,
    evolve,
    extract_frequency,
    population_series,
    two_level_amplitude,
)
from .fitting import (
    FitResult,
    RabiDataset,
    SingularFitError,
    fit_dataset,
    fit_linear,
    slope_vs_detuning,
    synth_dataset,
)
from .fluxonium import (
    BoxSizeError,
    DegenerateCouplingError,
    FluxoniumParams,
    FluxoniumSpectrum,
    GridResolutionError,
    SolverGrid,
    conjugate_ratio_check,
    drive_ratio,
    solve_spectrum,
)
from .gate import (
    COMPUTATIONAL_STATES,
    CORRECTIONS,
    GateConfig,
    GateErrorReport,
    StateOutcome,
    evaluate_gate,
    gate_config,
    sweep_anharmonicity,
)

__version__ = "0.1.0"

__all__ = [
    "COMPUTATIONAL_STATES",
    "CORRECTIONS",
    "REGIME_THRESHOLD",
    "BoxSizeError",
    "CubicInvariants",
    "DegenerateCouplingError",
    "DegenerateParameterError",
    "FitResult",
    "FluxoniumParams",
    "FluxoniumSpectrum",
    "GateConfig",
    "GateErrorReport",
    "GridResolutionError",
    "InternalConsistencyError",
    "NoOscillationError",
    "RabiBranch",
    "RabiDataset",
    "RabiSolution",
    "SingularFitError",
    "SolverGrid",
    "StateOutcome",
    "ThreeLevelParams",
    "TimeSeries",
    "build_hamiltonian",
    "conjugate_ratio_check",
    "cubic_invariants",
    "drive_ratio",
    "eigenvalue_gaps",
    "eigenvalues",
    "evaluate_gate",
    "evolve",
    "extract_frequency",
    "fit_dataset",
    "fit_linear",
    "gate_config",
    "population_series",
    "rabi_approx",
    "rabi_exact",
    "rabi_solution",
    "slope",
    "slope_gradient",
    "slope_vs_detuning",
    "solve_spectrum",
    "stark_shift",
    "sweep_anharmonicity",
    "synth_dataset",
    "two_level_amplitude",
    "verify_cubic_identity",
]
