"""Slope-extraction pipeline on synthetic Rabi-frequency data.

Generates (g, delta, omega) samples from the exact three-level model, fits
squared Rabi frequency against squared drive amplitude per detuning, then
fits the resulting slopes against detuning.  The stage-two gradient
estimates k^2/(2*alpha) in ns and its intercept estimates 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .analytic import rabi_exact
from .core import ThreeLevelParams

__all__ = [
    "FitResult",
    "RabiDataset",
    "SingularFitError",
    "fit_dataset",
    "fit_linear",
    "slope_vs_detuning",
    "synth_dataset",
]


class SingularFitError(ValueError):
    """The abscissa carries no spread, so the normal equations are singular."""


@dataclass(frozen=True)
class RabiDataset:
    """Rows of (g, delta, omega, sigma_omega), all in GHz."""

    g: np.ndarray
    delta: np.ndarray
    omega: np.ndarray
    sigma_omega: np.ndarray

    def __post_init__(self):
        arrays = {}
        for name in ("g", "delta", "omega", "sigma_omega"):
            arrays[name] = np.asarray(getattr(self, name), dtype=float)
            object.__setattr__(self, name, arrays[name])
        shape = arrays["g"].shape
        if arrays["g"].ndim != 1 or any(a.shape != shape for a in arrays.values()):
            raise ValueError("dataset columns must be 1-D arrays of equal length")
        if np.any(arrays["g"] < 0.0):
            raise ValueError("drive amplitudes must be >= 0")
        if np.any(arrays["sigma_omega"] < 0.0):
            raise ValueError("sigma_omega must be >= 0")

    def __len__(self) -> int:
        return self.g.size


@dataclass(frozen=True)
class FitResult:
    """Weighted linear-fit output: y = slope * x + intercept."""

    slope: float
    intercept: float
    slope_stderr: float
    intercept_stderr: float
    residual_rms: float


def synth_dataset(
    params_grid: Sequence[ThreeLevelParams],
    noise_rel: float,
    seed: int,
) -> RabiDataset:
    """Sample the exact model with multiplicative Gaussian noise.

    omega = rabi_exact * (1 + eps) with eps drawn from N(0, noise_rel^2)
    using a generator fully determined by the seed; sigma_omega is
    noise_rel * omega.  noise_rel must lie in [0, 0.05].
    """
    if not 0.0 <= noise_rel <= 0.05:
        raise ValueError(f"noise_rel must be in [0, 0.05], got {noise_rel}")
    g = np.array([p.g for p in params_grid], dtype=float)
    delta = np.array([p.delta for p in params_grid], dtype=float)
    omega = np.array([rabi_exact(p).omega for p in params_grid], dtype=float)
    if noise_rel > 0.0:
        rng = np.random.default_rng(seed)
        omega = omega * (1.0 + rng.normal(0.0, noise_rel, size=omega.size))
    return RabiDataset(g=g, delta=delta, omega=omega, sigma_omega=noise_rel * omega)


def fit_linear(x, y, sigma_y=None) -> FitResult:
    """Weighted least-squares line through (x, y) with known uncertainties.

    With all-positive sigma_y the fit minimizes chi^2 and the standard
    errors come from the estimator covariance (X' W X)^-1; with sigma_y
    omitted or all zero the fit is unweighted and the covariance is scaled
    by the residual variance.  Mixing zero and positive sigmas is rejected.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 1 or x.shape != y.shape:
        raise ValueError("x and y must be 1-D arrays of equal length")
    n = x.size
    if n < 3:
        raise ValueError(f"need at least 3 points to fit a line, got {n}")
    sigma = np.zeros(n) if sigma_y is None else np.asarray(sigma_y, dtype=float)
    if sigma.shape != x.shape:
        raise ValueError("sigma_y must match x in length")
    if np.any(sigma < 0.0):
        raise ValueError("sigma_y must be >= 0")
    weighted = bool(np.any(sigma > 0.0))
    if weighted and np.any(sigma == 0.0):
        raise ValueError("sigma_y must be all positive or all zero")

    w = 1.0 / sigma**2 if weighted else np.ones(n)
    wsum = w.sum()
    xbar = float((w * x).sum() / wsum)
    ybar = float((w * y).sum() / wsum)
    xc = x - xbar
    sxx = float((w * xc * xc).sum())
    scale = float(np.max(np.abs(x))) if n else 0.0
    if sxx <= 1e-13 * wsum * scale * scale or sxx == 0.0:
        raise SingularFitError("x values carry no spread; cannot fit a slope")

    slope = float((w * xc * y).sum() / sxx)
    intercept = ybar - slope * xbar
    residuals = y - slope * x - intercept
    residual_rms = float(np.sqrt(np.mean(residuals**2)))

    if weighted:
        var_slope = 1.0 / sxx
        var_intercept = 1.0 / wsum + xbar**2 / sxx
    else:
        chi2 = float((residuals**2).sum()) / (n - 2)
        var_slope = chi2 / sxx
        var_intercept = chi2 * (1.0 / n + xbar**2 / sxx)
    return FitResult(
        slope=slope,
        intercept=float(intercept),
        slope_stderr=math.sqrt(var_slope),
        intercept_stderr=math.sqrt(var_intercept),
        residual_rms=residual_rms,
    )


def fit_dataset(dataset: RabiDataset) -> FitResult:
    """Stage-one fit of squared Rabi frequency against squared amplitude.

    Uncertainties propagate as sigma(omega^2) = 2 * omega * sigma_omega.
    """
    return fit_linear(
        dataset.g**2, dataset.omega**2, 2.0 * dataset.omega * dataset.sigma_omega
    )


def slope_vs_detuning(datasets: Mapping[float, RabiDataset]) -> FitResult:
    """Two-stage fit: per-detuning slopes, then slope against detuning.

    The returned slope estimates k^2/(2*alpha) in ns and the intercept
    estimates 1.  Requires at least three distinct detunings, each dataset
    with at least three amplitudes.
    """
    if len(datasets) < 3:
        raise ValueError(f"need at least 3 distinct detunings, got {len(datasets)}")
    deltas = np.array(sorted(datasets), dtype=float)
    stage1 = [fit_dataset(datasets[d]) for d in deltas]
    slopes = np.array([fit.slope for fit in stage1])
    errors = np.array([fit.slope_stderr for fit in stage1])
    if not np.any(errors > 0.0):
        errors = None
    return fit_linear(deltas, slopes, errors)
