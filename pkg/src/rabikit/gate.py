"""Coherent-error model of the microwave-activated CZ gate.

The coupler's 0-1 transition splits into four state-dependent lines with
equal per-qubit dispersive shifts; parking the drive midway between the
non-excited and single-excited lines gives the detuning map
{00: +delta, 01: -delta, 10: -delta, 11: -3*delta}.  With amplitude
g = sqrt(5/3)*delta and duration tau = sqrt(3/2)/(2*delta) the two-level
rotations close exactly (one full cycle for 00/01/10, two for 11), which
yields an ideal CZ; the third coupler level perturbs the per-state Rabi
frequencies and turns that closure into leakage and a conditional-phase
error.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Mapping

from .analytic import rabi_approx, rabi_exact
from .core import DegenerateParameterError, ThreeLevelParams
from .dynamics import two_level_amplitude

__all__ = [
    "CORRECTIONS",
    "COMPUTATIONAL_STATES",
    "GateConfig",
    "GateErrorReport",
    "StateOutcome",
    "evaluate_gate",
    "gate_config",
    "sweep_anharmonicity",
]

COMPUTATIONAL_STATES = ("00", "01", "10", "11")
CORRECTIONS = ("none", "approx", "exact")


@dataclass(frozen=True)
class GateConfig:
    """Drive parameterization of the CZ gate for one operating point.

    delta, alpha, g in GHz; tau in ns; detunings maps each computational
    state to the drive detuning from its coupler transition (GHz).
    """

    delta: float
    alpha: float
    k: float
    g: float
    tau: float
    detunings: Mapping[str, float]


@dataclass(frozen=True)
class StateOutcome:
    detuning: float
    rabi: float
    ground_population: float
    phase: float


@dataclass(frozen=True)
class GateErrorReport:
    """Per-state amplitudes plus the aggregated leakage and phase errors.

    leakage_avg is the mean of 1 - |a0|^2 over the four computational
    states (leakage_max the worst one); phase_error is |conditional phase
    minus pi|, wrapped so that +pi and -pi are equivalent targets.
    """

    per_state: Mapping[str, StateOutcome]
    leakage_avg: float
    leakage_max: float
    conditional_phase: float
    phase_error: float


def gate_config(delta: float, alpha: float, k: float) -> GateConfig:
    """Ideal drive parameterization for base detuning delta > 0 (GHz)."""
    if not delta > 0.0:
        raise ValueError(f"delta must be positive, got {delta}")
    if alpha == 0.0:
        raise DegenerateParameterError("alpha must be nonzero")
    if k < 0.0:
        raise ValueError(f"k must be >= 0, got {k}")
    return GateConfig(
        delta=delta,
        alpha=alpha,
        k=k,
        g=math.sqrt(5.0 / 3.0) * delta,
        tau=math.sqrt(1.5) / (2.0 * delta),
        detunings={"00": delta, "01": -delta, "10": -delta, "11": -3.0 * delta},
    )


def _wrap(angle: float) -> float:
    """Map an angle into (-pi, pi]."""
    return math.atan2(math.sin(angle), math.cos(angle))


def _state_rabi(config: GateConfig, detuning: float, correction: str) -> float:
    if correction == "none":
        return math.hypot(detuning, config.g)
    params = ThreeLevelParams(g=config.g, delta=detuning, alpha=config.alpha, k=config.k)
    if correction == "approx":
        return rabi_approx(params)
    return rabi_exact(params).omega


def evaluate_gate(config: GateConfig, correction: str = "approx") -> GateErrorReport:
    """Leakage and conditional-phase error of the gate at one operating point.

    correction selects the per-state Rabi frequency: "none" keeps the bare
    two-level value sqrt(detuning^2 + g^2) (the ideal-closure baseline),
    "approx" applies the weak-drive anharmonicity correction, and "exact"
    uses the closed-form three-level gap.
    """
    if correction not in CORRECTIONS:
        raise ValueError(f"correction must be one of {CORRECTIONS}, got {correction!r}")
    per_state = {}
    for state in COMPUTATIONAL_STATES:
        detuning = config.detunings[state]
        rabi = _state_rabi(config, detuning, correction)
        amplitude = two_level_amplitude(detuning, rabi, config.tau)
        per_state[state] = StateOutcome(
            detuning=detuning,
            rabi=rabi,
            ground_population=abs(amplitude) ** 2,
            phase=cmath.phase(amplitude),
        )
    leakages = [1.0 - outcome.ground_population for outcome in per_state.values()]
    conditional = _wrap(
        per_state["11"].phase
        - per_state["10"].phase
        - per_state["01"].phase
        + per_state["00"].phase
    )
    return GateErrorReport(
        per_state=per_state,
        leakage_avg=sum(leakages) / len(leakages),
        leakage_max=max(leakages),
        conditional_phase=conditional,
        phase_error=abs(_wrap(conditional - math.pi)),
    )


def sweep_anharmonicity(
    delta: float,
    k: float,
    alphas,
    correction: str = "approx",
) -> list[tuple[float, float, float]]:
    """Evaluate the gate over a list of anharmonicities.

    Returns (alpha, leakage_avg, phase_error) per point; delta and k are
    held fixed across the sweep.
    """
    alphas = list(alphas)
    if any(a == 0.0 for a in alphas):
        raise ValueError("anharmonicity sweep must not contain zero")
    results = []
    for alpha in alphas:
        report = evaluate_gate(gate_config(delta, alpha, k), correction)
        results.append((alpha, report.leakage_avg, report.phase_error))
    return results
