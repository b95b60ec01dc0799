"""Fluxonium spectrum solver on a uniform phase grid.

Diagonalizes H/h = 4*Ec*n^2 + (El/2)*phi^2 - Ej*cos(phi - 2*pi*flux) with
n = -i d/dphi discretized by sixth-order central finite differences and
hard-wall boundaries at +-phi_max.  Energies come out directly in GHz.
Charge and flux matrix elements are computed by quadrature on the grid and
reported as absolute values (their phases are gauge dependent).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import diags
from scipy.sparse.linalg import eigsh

__all__ = [
    "BoxSizeError",
    "DegenerateCouplingError",
    "FluxoniumParams",
    "FluxoniumSpectrum",
    "GridResolutionError",
    "SolverGrid",
    "conjugate_ratio_check",
    "drive_ratio",
    "solve_spectrum",
]

#: doubling the grid may change nu01 by at most this much (GHz) before the
#: solver refuses the result
RESOLUTION_LIMIT = 1e-4
#: doubling change below this marks a fully converged grid
CONVERGENCE_TARGET = 1e-6
#: probability mass allowed near the hard walls
TAIL_LIMIT = 1e-8


class GridResolutionError(RuntimeError):
    """The phase grid is too coarse to resolve the spectrum."""


class BoxSizeError(RuntimeError):
    """Wavefunctions reach the hard walls; phi_max is too small."""


class DegenerateCouplingError(ValueError):
    """The 0-1 matrix element of the requested drive channel vanishes."""


@dataclass(frozen=True)
class FluxoniumParams:
    """Circuit energies in GHz (Ec charge, El inductive, Ej Josephson) and
    external flux in units of the flux quantum (periodic with period 1)."""

    ec: float
    el: float
    ej: float
    flux: float

    def __post_init__(self):
        if not (self.ec > 0.0 and self.el > 0.0):
            raise ValueError("ec and el must be positive")
        if self.ej < 0.0:
            raise ValueError("ej must be >= 0")
        if not math.isfinite(self.flux):
            raise ValueError("flux must be finite")


@dataclass(frozen=True)
class SolverGrid:
    """Uniform phase grid on [-phi_max, phi_max] with an odd point count."""

    phi_max: float = 6.0 * math.pi
    n_points: int = 2001

    def __post_init__(self):
        if self.phi_max < 4.0 * math.pi:
            raise ValueError(f"phi_max must be >= 4*pi, got {self.phi_max}")
        if self.n_points < 501 or self.n_points % 2 == 0:
            raise ValueError(f"n_points must be odd and >= 501, got {self.n_points}")


@dataclass(frozen=True)
class FluxoniumSpectrum:
    """Lowest levels (GHz, ascending) with |n_ij| and |phi_ij| matrices.

    alpha = nu12 - nu01 holds exactly by construction.  tail_mass and
    convergence_dnu01 are solver diagnostics: edge probability mass of the
    worst level and the nu01 change under grid doubling.
    """

    params: FluxoniumParams
    grid: SolverGrid
    levels: np.ndarray
    nu01: float
    nu12: float
    alpha: float
    n_elems: np.ndarray
    phi_elems: np.ndarray
    tail_mass: float
    convergence_dnu01: float

    @property
    def converged(self) -> bool:
        return self.convergence_dnu01 < CONVERGENCE_TARGET


# sixth-order central stencils; hard walls are imposed by zero padding
_D2 = np.array([2.0, -27.0, 270.0, -490.0, 270.0, -27.0, 2.0]) / 180.0
_D1 = np.array([-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0]) / 60.0


def _derivative(columns: np.ndarray, h: float) -> np.ndarray:
    out = np.zeros_like(columns)
    padded = np.pad(columns, ((3, 3), (0, 0)))
    for offset, coeff in enumerate(_D1):
        if coeff != 0.0:
            out += coeff * padded[offset : offset + columns.shape[0], :]
    return out / h


def _solve_on_grid(params: FluxoniumParams, phi_max: float, n: int, n_levels: int):
    phi = np.linspace(-phi_max, phi_max, n)
    h = phi[1] - phi[0]
    potential = 0.5 * params.el * phi**2 - params.ej * np.cos(phi - 2.0 * math.pi * params.flux)

    kinetic = -4.0 * params.ec * _D2 / h**2  # n^2 = -d^2/dphi^2
    hamiltonian = diags(
        [
            np.full(n - 3, kinetic[0]),
            np.full(n - 2, kinetic[1]),
            np.full(n - 1, kinetic[2]),
            kinetic[3] + potential,
            np.full(n - 1, kinetic[2]),
            np.full(n - 2, kinetic[1]),
            np.full(n - 3, kinetic[0]),
        ],
        offsets=[-3, -2, -1, 0, 1, 2, 3],
        format="csc",
    )
    # shift-invert about a point strictly below the spectrum (the kinetic
    # term is positive semidefinite); fixed start vector keeps runs identical
    sigma = float(potential.min()) - 1.0
    levels, vecs = eigsh(
        hamiltonian,
        k=n_levels,
        sigma=sigma,
        which="LM",
        v0=np.full(n, 1.0 / math.sqrt(n)),
    )
    order = np.argsort(levels)
    levels = levels[order]
    vecs = vecs[:, order]
    # eigenvectors are l2-normalized, i.e. unit probability on the grid
    phi_elems = np.abs(vecs.T @ (phi[:, None] * vecs))
    n_elems = np.abs(vecs.T @ _derivative(vecs, h))  # |<i| -i d/dphi |j>|
    tail = float(np.max(np.sum(vecs[:5] ** 2, axis=0) + np.sum(vecs[-5:] ** 2, axis=0)))
    return levels, n_elems, phi_elems, tail


def solve_spectrum(
    params: FluxoniumParams,
    grid: SolverGrid | None = None,
    n_levels: int = 6,
) -> FluxoniumSpectrum:
    """Diagonalize the fluxonium Hamiltonian and collect matrix elements.

    The solution on the requested grid is returned; a second solve on a
    doubled grid (2*n_points - 1 points, same phi_max) provides the
    convergence diagnostic.  Raises GridResolutionError when doubling moves
    nu01 by more than 1e-4 GHz and BoxSizeError when more than 1e-8 of any
    kept level's probability sits at the walls.
    """
    if grid is None:
        grid = SolverGrid()
    if n_levels < 3:
        raise ValueError("n_levels must be >= 3 to define nu01, nu12 and alpha")
    if n_levels > grid.n_points // 4:
        raise ValueError("n_levels is too large for the grid")

    levels, n_elems, phi_elems, tail = _solve_on_grid(
        params, grid.phi_max, grid.n_points, n_levels
    )
    if tail > TAIL_LIMIT:
        raise BoxSizeError(
            f"tail mass {tail:.2e} exceeds {TAIL_LIMIT:.0e}; increase phi_max"
        )

    fine_levels, _, _, _ = _solve_on_grid(
        params, grid.phi_max, 2 * grid.n_points - 1, n_levels
    )
    dnu01 = abs((fine_levels[1] - fine_levels[0]) - (levels[1] - levels[0]))
    if dnu01 > RESOLUTION_LIMIT:
        raise GridResolutionError(
            f"nu01 moves by {dnu01:.2e} GHz under grid doubling; increase n_points"
        )

    nu01 = float(levels[1] - levels[0])
    nu12 = float(levels[2] - levels[1])
    return FluxoniumSpectrum(
        params=params,
        grid=grid,
        levels=levels,
        nu01=nu01,
        nu12=nu12,
        alpha=nu12 - nu01,
        n_elems=n_elems,
        phi_elems=phi_elems,
        tail_mass=tail,
        convergence_dnu01=float(dnu01),
    )


def drive_ratio(spectrum: FluxoniumSpectrum, channel: str) -> float:
    """Matrix-element ratio k = |m12| / |m01| for the charge or flux channel."""
    if channel == "charge":
        elems = spectrum.n_elems
    elif channel == "flux":
        elems = spectrum.phi_elems
    else:
        raise ValueError(f"channel must be 'charge' or 'flux', got {channel!r}")
    if elems.shape[0] < 3:
        raise ValueError("spectrum must contain at least three levels")
    if elems[0, 1] < 1e-12:
        raise DegenerateCouplingError(f"{channel} 0-1 matrix element vanishes")
    return float(elems[1, 2] / elems[0, 1])


def conjugate_ratio_check(spectrum: FluxoniumSpectrum) -> float:
    """Deviation of the conjugate-variable relation between charge and flux elements.

    Because the kinetic term is quadratic in n, |n_ij| is proportional to
    nu_ij * |phi_ij|, which makes (n12/n01) = (nu12/nu01)*(phi12/phi01) an
    exact identity; the returned |ratio - 1| measures how well the solver
    honors it.
    """
    if spectrum.levels.size < 3:
        raise ValueError("spectrum must contain at least three levels")
    if min(spectrum.n_elems[0, 1], spectrum.phi_elems[0, 1]) < 1e-12:
        raise DegenerateCouplingError("0-1 matrix element vanishes")
    charge_ratio = spectrum.n_elems[1, 2] / spectrum.n_elems[0, 1]
    flux_ratio = spectrum.phi_elems[1, 2] / spectrum.phi_elems[0, 1]
    frequency_ratio = spectrum.nu12 / spectrum.nu01
    return float(abs(charge_ratio / (frequency_ratio * flux_ratio) - 1.0))
