"""Closed-form spectral results for the weakly driven three-level system.

Everything here is exact algebra on the 3x3 drive-frame Hamiltonian: the
symmetric invariants of its characteristic cubic, trigonometric eigenvalue
gaps, the closed-form 0-1 Rabi frequency, and the second-order weak-drive
approximation together with its slope and Stark-shift coefficients.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import ThreeLevelParams

__all__ = [
    "CubicInvariants",
    "InternalConsistencyError",
    "RabiBranch",
    "RabiSolution",
    "cubic_invariants",
    "eigenvalue_gaps",
    "eigenvalues",
    "rabi_approx",
    "rabi_exact",
    "rabi_solution",
    "slope",
    "slope_gradient",
    "stark_shift",
    "verify_cubic_identity",
]


class InternalConsistencyError(RuntimeError):
    """An identity that holds by construction was violated numerically."""


@dataclass(frozen=True)
class CubicInvariants:
    """Symmetric invariants of the trace-reduced characteristic cubic.

    Up to fixed numeric factors, i1 (GHz^2) is the sum of squares and
    i2 (GHz^3) the product of the trace-shifted eigenvalues.  i0 (GHz^6)
    is the complex Cardano intermediate of the closed-form gap root; its
    magnitude equals i1**3 whenever the spectrum is real.
    """

    i1: float
    i2: float
    i0: complex


class RabiBranch(NamedTuple):
    omega: float
    branch_valid: bool


@dataclass(frozen=True)
class RabiSolution:
    """Closed-form summary for one parameter point.

    omega_gaps holds the three eigenvalue gaps in GHz, largest first;
    omega_exact is the selected 0-1 gap, omega_approx its weak-drive
    approximation.  slope is dimensionless; stark is in GHz.
    """

    omega_gaps: tuple[float, float, float]
    omega_exact: float
    omega_approx: float
    slope: float
    stark: float
    branch_valid: bool


def cubic_invariants(params: ThreeLevelParams) -> CubicInvariants:
    """Invariants i1, i2 and the Cardano intermediate i0 for the given point."""
    g, d, a, k = params.g, params.delta, params.alpha, params.k
    g2 = g * g
    k2 = k * k
    i1 = 0.75 * g2 * (1.0 + k2) + a * a - 3.0 * a * d + 3.0 * d * d
    i2 = (
        -4.5 * g2 * a
        + 2.25 * g2 * k2 * a
        + 2.0 * a**3
        + 6.75 * g2 * d
        - 6.75 * g2 * k2 * d
        - 9.0 * a * a * d
        + 9.0 * a * d * d
    )
    # Hermiticity forces i2^2 <= 4*i1^3, so the root below is imaginary and
    # i0 genuinely complex (casus irreducibilis): principal branch throughout.
    i0 = -(i1**3) + 0.5 * i2 * i2 + 0.5 * i2 * cmath.sqrt(complex(i2 * i2 - 4.0 * i1**3))
    return CubicInvariants(i1=i1, i2=i2, i0=i0)


# Phase offsets selecting the three pairwise gaps in the trigonometric form.
_GAP_PHASES = (math.pi / 2.0, math.pi / 6.0, -math.pi / 6.0)


def _unit_argument(inv: CubicInvariants) -> float:
    """i2 / (2 i1^(3/2)), clamped against sub-1e-12 rounding excursions."""
    x = inv.i2 / (2.0 * inv.i1**1.5)
    if abs(x) > 1.0:
        if abs(x) - 1.0 > 1e-12:
            raise InternalConsistencyError(
                f"cubic argument {x!r} outside [-1, 1]; invariants are inconsistent"
            )
        x = math.copysign(1.0, x)
    return x


def eigenvalue_gaps(params: ThreeLevelParams) -> np.ndarray:
    """Absolute eigenvalue differences of the Hamiltonian, in GHz.

    Uses the trigonometric solution of the characteristic cubic, which stays
    accurate where direct radicals cancel badly.  Returned largest gap first;
    the largest is always the sum of the other two.
    """
    inv = cubic_invariants(params)
    psi = math.asin(_unit_argument(inv)) / 3.0
    scale = 2.0 * math.sqrt(inv.i1 / 3.0)
    return np.array([scale * abs(math.sin(phi - psi)) for phi in _GAP_PHASES])


def eigenvalues(params: ThreeLevelParams) -> np.ndarray:
    """Closed-form eigenvalues of the Hamiltonian (GHz), descending order."""
    inv = cubic_invariants(params)
    theta = math.acos(_unit_argument(inv)) / 3.0
    scale = (2.0 / 3.0) * math.sqrt(inv.i1)
    shift = (params.alpha - 3.0 * params.delta) / 3.0
    vals = [scale * math.cos(theta - 2.0 * math.pi * r / 3.0) + shift for r in range(3)]
    return np.array(sorted(vals, reverse=True))


def rabi_exact(params: ThreeLevelParams) -> RabiBranch:
    """0-1 Rabi frequency (GHz) from the closed-form root of the gap cubic.

    The root is evaluated with complex arithmetic and the principal cube
    root; its imaginary part must vanish up to rounding and is asserted.
    branch_valid reports whether the parameters satisfy
    |alpha - 1.5*delta| > sqrt(delta^2 + g^2), the range in which this root
    is the gap of the dressed pair connected to the bare 0 and 1 levels.
    Outside that range the value is still returned, flagged invalid.
    """
    inv = cubic_invariants(params)
    croot = inv.i0 ** (1.0 / 3.0)
    omega_sq = (2.0 / 3.0) * inv.i1 - (croot + inv.i1**2 / croot) / 3.0
    tol = 1e-9 * max(1.0, params.alpha * params.alpha)
    if abs(omega_sq.imag) > tol:
        raise InternalConsistencyError(
            f"imaginary residue {omega_sq.imag:.3e} GHz^2 in the closed-form root"
        )
    omega = math.sqrt(max(omega_sq.real, 0.0))
    valid = abs(params.alpha - 1.5 * params.delta) > math.hypot(params.delta, params.g)
    return RabiBranch(omega=omega, branch_valid=valid)


def rabi_approx(params: ThreeLevelParams) -> float:
    """Weak-drive 0-1 Rabi frequency sqrt(delta^2 + g^2 * slope), in GHz."""
    radicand = params.delta**2 + params.g**2 * slope(params)
    if radicand < 0.0:
        raise ValueError(
            f"negative radicand {radicand:.3e} GHz^2; parameters are far outside "
            "the weak-drive domain"
        )
    return math.sqrt(radicand)


def slope(params: ThreeLevelParams) -> float:
    """Coefficient s = 1 + (k^2/2)(delta/alpha) linking squared Rabi frequency to g^2."""
    return 1.0 + 0.5 * params.k**2 * params.delta / params.alpha


def slope_gradient(alpha: float, k: float) -> float:
    """Rate of change of the slope with detuning, k^2/(2*alpha), in ns."""
    if alpha == 0.0:
        raise ValueError("alpha must be nonzero")
    return 0.5 * k * k / alpha


def stark_shift(params: ThreeLevelParams) -> float:
    """Drive-induced shift (k^2/4)(g^2/alpha) of the 0-1 transition, in GHz."""
    return 0.25 * params.k**2 * params.g**2 / params.alpha


def verify_cubic_identity(params: ThreeLevelParams, omega: float) -> float:
    """Relative residual of 4*i1^3 - i2^2 = 27*omega^2*(i1 - omega^2)^2.

    Every eigenvalue gap satisfies the identity exactly, so residuals below
    1e-8 certify a gap and residuals well above it rule one out.
    """
    inv = cubic_invariants(params)
    lhs = 4.0 * inv.i1**3 - inv.i2**2
    rhs = 27.0 * omega**2 * (inv.i1 - omega**2) ** 2
    return abs(lhs - rhs) / (4.0 * inv.i1**3 + inv.i2**2 + 1e-300)


def rabi_solution(params: ThreeLevelParams) -> RabiSolution:
    """All closed-form quantities for one parameter point."""
    gaps = eigenvalue_gaps(params)
    exact = rabi_exact(params)
    return RabiSolution(
        omega_gaps=(float(gaps[0]), float(gaps[1]), float(gaps[2])),
        omega_exact=exact.omega,
        omega_approx=rabi_approx(params),
        slope=slope(params),
        stark=stark_shift(params),
        branch_valid=exact.branch_valid,
    )
