"""Domain types and the drive-frame Hamiltonian of a driven three-level system.

Unit conventions used throughout the package: all frequencies are linear
frequencies in GHz, all times are in ns, and time evolution carries the
phase factor exp(-i*2*pi*E*t).  The drive phase is fixed to zero (real
drive amplitude); Rabi frequencies and populations do not depend on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "REGIME_THRESHOLD",
    "DegenerateParameterError",
    "ThreeLevelParams",
    "build_hamiltonian",
]

# |g/alpha| and |delta/alpha| at or below this value mark the weak-drive
# domain in which the closed-form results are validated.  Outside it all
# operations still evaluate, but callers should treat the output as an
# extrapolation (the CLI reports a regime warning).
REGIME_THRESHOLD = 0.2


class DegenerateParameterError(ValueError):
    """Raised when alpha = 0 makes the three-level reduction singular."""


@dataclass(frozen=True)
class ThreeLevelParams:
    """Drive and level-structure parameters of the driven qutrit.

    g: drive amplitude (GHz); delta: drive detuning from the 0-1 transition
    (GHz); alpha: anharmonicity, i.e. the 1-2 minus the 0-1 transition
    frequency (GHz, signed); k: ratio of the 1-2 to 0-1 drive matrix
    elements (dimensionless, >= 0).
    """

    g: float
    delta: float
    alpha: float
    k: float

    def __post_init__(self):
        for name in ("g", "delta", "alpha", "k"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if self.alpha == 0.0:
            raise DegenerateParameterError(
                "alpha must be nonzero; the correction terms divide by it"
            )
        if self.g < 0.0:
            raise ValueError(f"drive amplitude g must be >= 0, got {self.g}")
        if self.k < 0.0:
            raise ValueError(f"matrix-element ratio k must be >= 0, got {self.k}")

    @property
    def in_validated_regime(self) -> bool:
        """True when |g/alpha| and |delta/alpha| both stay within the weak-drive domain."""
        bound = REGIME_THRESHOLD * abs(self.alpha)
        return abs(self.g) <= bound and abs(self.delta) <= bound


def build_hamiltonian(params: ThreeLevelParams) -> np.ndarray:
    """Drive-frame Hamiltonian of the three-level system, in GHz.

    Returns the 3x3 complex Hermitian matrix

        [[0,      g/2,    0     ],
         [g/2,   -delta,  k*g/2 ],
         [0,      k*g/2, -2*delta + alpha]]

    The (0, 2) entry is identically zero: the equal-parity 0-2 transition
    is forbidden.  The matrix is real symmetric under the zero-drive-phase
    convention; complex storage is kept for generality.
    """
    g, delta, alpha, k = params.g, params.delta, params.alpha, params.k
    half_g = 0.5 * g
    return np.array(
        [
            [0.0, half_g, 0.0],
            [half_g, -delta, k * half_g],
            [0.0, k * half_g, -2.0 * delta + alpha],
        ],
        dtype=complex,
    )
