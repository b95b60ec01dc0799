"""Command-line interface exposing all computations with CSV/JSON output.

Exit statuses: 0 success, 2 usage or validation error, 3 numerical
non-convergence.  CSV uses a comma separator, '.' decimal point, LF line
endings and 12 significant digits.  JSON is UTF-8 without NaN/Inf.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .analytic import rabi_approx, rabi_exact, rabi_solution
from .core import ThreeLevelParams
from .fitting import RabiDataset, fit_dataset, slope_vs_detuning, synth_dataset
from .fluxonium import (
    BoxSizeError,
    FluxoniumParams,
    GridResolutionError,
    SolverGrid,
    conjugate_ratio_check,
    drive_ratio,
    solve_spectrum,
)
from .gate import evaluate_gate, gate_config

SWEEP_HEADER = "g_ghz,delta_ghz,omega_exact_ghz,omega_approx_ghz,omega_sq_exact,omega_sq_approx"
GATE_SWEEP_HEADER = "alpha_ghz,leakage_avg,leakage_max,phase_error_rad"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _csv_text(header: str, rows) -> str:
    lines = [header]
    lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def _report_text(report: dict, fmt: str) -> str:
    if fmt == "json":
        return _json_text(report)
    scalars = {k: v for k, v in report.items() if isinstance(v, (bool, int, float, str))}
    return _csv_text(",".join(scalars), [list(scalars.values())])


def _parse_floats(text: str, flag: str) -> list[float]:
    try:
        values = [float(item) for item in text.split(",") if item.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"{flag} expects comma-separated numbers: {exc}") from None
    if not values:
        raise ValueError(f"{flag} must contain at least one value")
    return values


def _amplitude_grid(g_min: float, g_max: float, g_step: float) -> np.ndarray:
    if g_step <= 0.0:
        raise ValueError("--g-step must be positive")
    grid = np.arange(g_min, g_max + 0.5 * g_step, g_step)
    if grid.size == 0:
        raise ValueError("empty amplitude range")
    return grid


def _cmd_rabi(args) -> int:
    params = ThreeLevelParams(g=args.g, delta=args.delta, alpha=args.alpha, k=args.k)
    sol = rabi_solution(params)
    report = {
        "g": params.g,
        "delta": params.delta,
        "alpha": params.alpha,
        "k": params.k,
        "omega_gaps": list(sol.omega_gaps),
        "omega_exact": sol.omega_exact,
        "omega_approx": sol.omega_approx,
        "slope": sol.slope,
        "stark": sol.stark,
        "branch_valid": sol.branch_valid,
        "regime_warning": not params.in_validated_regime,
    }
    _write(_report_text(report, args.format), args.out)
    return 0


def _cmd_sweep(args) -> int:
    deltas = _parse_floats(args.deltas, "--deltas")
    grid = _amplitude_grid(args.g_min, args.g_max, args.g_step)
    rows = []
    for delta in deltas:
        for g in grid:
            params = ThreeLevelParams(g=float(g), delta=delta, alpha=args.alpha, k=args.k)
            exact = rabi_exact(params).omega
            approx = rabi_approx(params)
            rows.append((float(g), delta, exact, approx, exact**2, approx**2))
    if args.format == "json":
        keys = SWEEP_HEADER.split(",")
        _write(_json_text([dict(zip(keys, row)) for row in rows]), args.out)
    else:
        _write(_csv_text(SWEEP_HEADER, rows), args.out)
    return 0


def _cmd_fluxonium(args) -> int:
    params = FluxoniumParams(ec=args.ec, el=args.el, ej=args.ej, flux=args.flux)
    grid = SolverGrid(phi_max=args.phi_max, n_points=args.n_points)
    spectrum = solve_spectrum(params, grid, n_levels=args.n_levels)
    report = {
        "levels": [float(v) for v in spectrum.levels],
        "nu01": spectrum.nu01,
        "nu12": spectrum.nu12,
        "alpha": spectrum.alpha,
        "k_charge": drive_ratio(spectrum, "charge"),
        "k_flux": drive_ratio(spectrum, "flux"),
        "conjugate_ratio_deviation": conjugate_ratio_check(spectrum),
        "tail_mass": spectrum.tail_mass,
        "convergence_dnu01": spectrum.convergence_dnu01,
        "converged": spectrum.converged,
    }
    if args.channel:
        report["channel"] = args.channel
        report["k"] = drive_ratio(spectrum, args.channel)
    _write(_report_text(report, args.format), args.out)
    return 0


def _cmd_gate(args) -> int:
    if args.alpha_sweep:
        sweep_spec = _parse_floats(args.alpha_sweep, "--alpha-sweep")
        if len(sweep_spec) != 3:
            raise ValueError("--alpha-sweep expects START,STOP,COUNT")
        start, stop, count = sweep_spec
        alphas = np.linspace(start, stop, int(count))
        if np.any(alphas == 0.0) or start * stop <= 0.0:
            raise ValueError("--alpha-sweep must not contain or cross zero")
        rows = []
        for alpha in alphas:
            report = evaluate_gate(gate_config(args.delta, float(alpha), args.k), args.correction)
            rows.append((float(alpha), report.leakage_avg, report.leakage_max, report.phase_error))
        if (args.format or "csv") == "json":
            keys = GATE_SWEEP_HEADER.split(",")
            _write(_json_text([dict(zip(keys, row)) for row in rows]), args.out)
        else:
            _write(_csv_text(GATE_SWEEP_HEADER, rows), args.out)
        return 0
    if args.alpha is None:
        raise ValueError("--alpha is required unless --alpha-sweep is given")
    config = gate_config(args.delta, args.alpha, args.k)
    report = evaluate_gate(config, args.correction)
    payload = {
        "delta": config.delta,
        "alpha": config.alpha,
        "k": config.k,
        "g": config.g,
        "tau": config.tau,
        "correction": args.correction,
        "per_state": {
            state: {
                "detuning": outcome.detuning,
                "rabi": outcome.rabi,
                "ground_population": outcome.ground_population,
                "phase": outcome.phase,
            }
            for state, outcome in report.per_state.items()
        },
        "leakage_avg": report.leakage_avg,
        "leakage_max": report.leakage_max,
        "conditional_phase": report.conditional_phase,
        "phase_error": report.phase_error,
    }
    _write(_report_text(payload, args.format or "json"), args.out)
    return 0


def _read_sweep_csv(path: str) -> dict[float, RabiDataset]:
    expected_fields = SWEEP_HEADER.split(",")
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    if not lines or lines[0] != SWEEP_HEADER:
        raise ValueError(f"unexpected CSV header; expected '{SWEEP_HEADER}'")
    by_delta: dict[float, list[tuple[float, float]]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if line.strip() == "":
            continue
        fields = line.split(",")
        if len(fields) != len(expected_fields):
            raise ValueError(f"CSV parse error at line {lineno}: expected "
                             f"{len(expected_fields)} fields, got {len(fields)}")
        try:
            g, delta, omega = float(fields[0]), float(fields[1]), float(fields[2])
        except ValueError:
            raise ValueError(f"CSV parse error at line {lineno}: non-numeric field") from None
        by_delta.setdefault(delta, []).append((g, omega))
    datasets = {}
    for delta, rows in by_delta.items():
        g = np.array([r[0] for r in rows])
        omega = np.array([r[1] for r in rows])
        datasets[delta] = RabiDataset(
            g=g, delta=np.full_like(g, delta), omega=omega, sigma_omega=np.zeros_like(g)
        )
    return datasets


def _synthetic_datasets(args) -> dict[float, RabiDataset]:
    missing = [
        flag
        for flag, value in (
            ("--alpha", args.alpha),
            ("--k", args.k),
            ("--deltas", args.deltas),
            ("--g-min", args.g_min),
            ("--g-max", args.g_max),
            ("--g-step", args.g_step),
        )
        if value is None
    ]
    if missing:
        raise ValueError(f"--synthetic requires {', '.join(missing)}")
    deltas = _parse_floats(args.deltas, "--deltas")
    grid = _amplitude_grid(args.g_min, args.g_max, args.g_step)
    params = [
        ThreeLevelParams(g=float(g), delta=delta, alpha=args.alpha, k=args.k)
        for delta in deltas
        for g in grid
    ]
    combined = synth_dataset(params, args.noise, args.seed)
    datasets = {}
    for delta in deltas:
        rows = combined.delta == delta
        datasets[delta] = RabiDataset(
            g=combined.g[rows],
            delta=combined.delta[rows],
            omega=combined.omega[rows],
            sigma_omega=combined.sigma_omega[rows],
        )
    return datasets


def _cmd_fit(args) -> int:
    if args.format == "csv":
        raise ValueError("fit emits JSON only")
    if bool(args.csv) == bool(args.synthetic):
        raise ValueError("give exactly one of --csv PATH or --synthetic")
    datasets = _read_sweep_csv(args.csv) if args.csv else _synthetic_datasets(args)
    fit_fields = ("slope", "intercept", "slope_stderr", "intercept_stderr", "residual_rms")
    stage1 = []
    for delta in sorted(datasets):
        fit = fit_dataset(datasets[delta])
        stage1.append({"delta": delta, **{f: getattr(fit, f) for f in fit_fields}})
    stage2 = slope_vs_detuning(datasets)
    payload = {
        "stage1": stage1,
        "stage2": {f: getattr(stage2, f) for f in fit_fields},
    }
    _write(_json_text(payload), args.out)
    return 0


def _add_output_flags(parser: argparse.ArgumentParser, default_format: str | None) -> None:
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument(
        "--format",
        choices=("csv", "json"),
        default=default_format,
        help="csv or json (gate: json report, csv sweep)" if default_format is None else None,
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rabikit",
        description="Near-resonant Rabi dynamics of anharmonic qubits "
        "(frequencies in GHz, times in ns)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rabi = sub.add_parser("rabi", help="closed-form Rabi report for one parameter point")
    rabi.add_argument("--g", type=float, required=True)
    rabi.add_argument("--delta", type=float, required=True)
    rabi.add_argument("--alpha", type=float, required=True)
    rabi.add_argument("--k", type=float, required=True)
    _add_output_flags(rabi, "json")
    rabi.set_defaults(handler=_cmd_rabi)

    sweep = sub.add_parser("sweep", help="amplitude/detuning sweep as plot-ready CSV")
    sweep.add_argument("--g-min", type=float, required=True)
    sweep.add_argument("--g-max", type=float, required=True)
    sweep.add_argument("--g-step", type=float, required=True)
    sweep.add_argument("--deltas", required=True, help="comma-separated detunings (GHz)")
    sweep.add_argument("--alpha", type=float, required=True)
    sweep.add_argument("--k", type=float, required=True)
    _add_output_flags(sweep, "csv")
    sweep.set_defaults(handler=_cmd_sweep)

    flx = sub.add_parser("fluxonium", help="diagonalize the fluxonium Hamiltonian")
    flx.add_argument("--ec", type=float, required=True)
    flx.add_argument("--el", type=float, required=True)
    flx.add_argument("--ej", type=float, required=True)
    flx.add_argument("--flux", type=float, required=True)
    flx.add_argument("--phi-max", type=float, default=6.0 * math.pi)
    flx.add_argument("--n-points", type=int, default=2001)
    flx.add_argument("--n-levels", type=int, default=6)
    flx.add_argument("--channel", choices=("charge", "flux"), default=None)
    _add_output_flags(flx, "json")
    flx.set_defaults(handler=_cmd_fluxonium)

    gate = sub.add_parser("gate", help="CZ-gate coherent-error report or anharmonicity sweep")
    gate.add_argument("--delta", type=float, required=True)
    gate.add_argument("--alpha", type=float, default=None)
    gate.add_argument("--k", type=float, required=True)
    gate.add_argument("--correction", choices=("none", "approx", "exact"), default="approx")
    gate.add_argument("--alpha-sweep", default=None, metavar="START,STOP,COUNT")
    _add_output_flags(gate, None)
    gate.set_defaults(handler=_cmd_gate)

    fit = sub.add_parser("fit", help="two-stage slope fit from CSV or synthetic data")
    fit.add_argument("--csv", default=None, help="sweep CSV to fit")
    fit.add_argument("--synthetic", action="store_true", help="generate data from the model")
    fit.add_argument("--alpha", type=float, default=None)
    fit.add_argument("--k", type=float, default=None)
    fit.add_argument("--deltas", default=None)
    fit.add_argument("--g-min", type=float, default=None)
    fit.add_argument("--g-max", type=float, default=None)
    fit.add_argument("--g-step", type=float, default=None)
    fit.add_argument("--noise", type=float, default=0.0)
    fit.add_argument("--seed", type=int, default=0)
    _add_output_flags(fit, "json")
    fit.set_defaults(handler=_cmd_fit)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (GridResolutionError, BoxSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
