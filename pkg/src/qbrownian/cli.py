"""Command-line front end producing CSV/JSON data sets.

Subcommands:
  curve       thermodynamic quantities on a temperature grid (CSV)
  fig1        free-particle specific-heat figure data, main + inset (two CSVs)
  compare     both energy prescriptions, their gap, and FD cross-checks (JSON)
  expansions  limit expansions against exact values with error exponents (CSV)

All numeric output uses 17 significant digits (round-trip exact for doubles);
CSV files start with a header line followed by a comment row carrying the full
parameter set and the library version.  Exit codes: 0 success, 2 usage error,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from typing import Callable, Iterable, TextIO

import numpy as np

from . import __version__
from .core import ConvergenceError, DivergenceError, DomainError, Tolerances
from .free_particle import (drude_specific_heat, free_energy_internal,
                            ohmic_lowT_expansion, ohmic_specific_heat)
from .matsubara import (DampingKernel, Prescription, energy_sum,
                        prescription_gap, specific_heat_fd)
from .oscillator import (damped_entropy, damped_specific_heat,
                         damped_specific_heat_via_entropy,
                         oscillator_expansion, undamped_thermo)

_MODELS = ("oscillator", "free")
_KERNELS = ("ohmic", "drude")
_ROUTES = ("energy", "partition", "both")
_QUANTITIES = ("C", "S", "E")


@dataclasses.dataclass
class CurveSpec:
    """Validated description of one curve/compare run."""

    model: str
    kernel: str = "ohmic"
    alpha: float | None = None
    cutoff_ratio: float | None = None
    t_min: float = 0.01
    t_max: float = 10.0
    points: int = 100
    log_grid: bool = False
    route: str = "energy"
    quantities: tuple[str, ...] = ("C",)
    tol: float = 1e-12

    def validate(self) -> None:
        if self.model not in _MODELS:
            raise DomainError(f"model must be one of {_MODELS}, got {self.model!r}")
        if self.kernel not in _KERNELS:
            raise DomainError(f"kernel must be one of {_KERNELS}, got {self.kernel!r}")
        if not (0.0 < self.t_min < self.t_max and math.isfinite(self.t_max)):
            raise DomainError(
                f"need 0 < tmin < tmax, got tmin={self.t_min!r} tmax={self.t_max!r}")
        if self.points < 2:
            raise DomainError(f"points must be >= 2, got {self.points!r}")
        if self.route not in _ROUTES:
            raise DomainError(f"route must be one of {_ROUTES}, got {self.route!r}")
        if not self.quantities or any(q not in _QUANTITIES for q in self.quantities):
            raise DomainError(
                f"quantities must be a nonempty subset of {_QUANTITIES}, "
                f"got {self.quantities!r}")
        if not (0.0 < self.tol < 1.0):
            raise DomainError(f"tol must lie in (0, 1), got {self.tol!r}")
        if self.model == "free":
            if self.alpha is not None:
                raise DomainError("alpha has no meaning for the free particle; "
                                  "its temperature scale is the damping rate itself")
            if self.route != "energy":
                raise DomainError("the free particle supports route=energy only")
            if "S" in self.quantities:
                raise DomainError("entropy output is available for the oscillator only")
        else:
            if self.alpha is not None and not (self.alpha >= 0.0
                                               and math.isfinite(self.alpha)):
                raise DomainError(f"alpha must be >= 0 and finite, got {self.alpha!r}")
            if "S" in self.quantities and self.kernel != "ohmic":
                raise DomainError("entropy has a closed form for the ohmic "
                                  "oscillator only; drop S or use kernel=ohmic")
        if self.kernel == "ohmic":
            if self.cutoff_ratio is not None and math.isfinite(self.cutoff_ratio):
                raise DomainError("a finite cutoff-ratio requires kernel=drude")
        else:
            if self.cutoff_ratio is None or not (self.cutoff_ratio > 0.0
                                                 and math.isfinite(self.cutoff_ratio)):
                raise DomainError("kernel=drude needs a positive finite cutoff-ratio")

    @property
    def alpha_value(self) -> float:
        return 1.0 if self.alpha is None else self.alpha

    def grid(self) -> np.ndarray:
        if self.log_grid:
            return np.logspace(math.log10(self.t_min), math.log10(self.t_max),
                               self.points)
        return np.linspace(self.t_min, self.t_max, self.points)

    def tolerances(self) -> Tolerances:
        return Tolerances(rel_sum_tail=self.tol)

    def make_kernel(self) -> DampingKernel:
        gamma = 1.0 if self.model == "free" else self.alpha_value
        if self.kernel == "ohmic":
            return DampingKernel.ohmic(gamma)
        return DampingKernel.drude(gamma, self.cutoff_ratio * gamma)

    def params_comment(self) -> str:
        alpha = "none" if self.alpha is None else _fmt(self.alpha_value)
        cutoff = "inf" if self.kernel == "ohmic" else _fmt(self.cutoff_ratio)
        return ("# " + " ".join([
            f"model={self.model}", f"kernel={self.kernel}", f"alpha={alpha}",
            f"cutoff_ratio={cutoff}", f"route={self.route}",
            f"quantities={','.join(self.quantities)}", f"tmin={_fmt(self.t_min)}",
            f"tmax={_fmt(self.t_max)}", f"points={self.points}",
            f"log={str(self.log_grid).lower()}", f"tol={_fmt(self.tol)}",
            f"version={__version__}"]))


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _annotate(theta: float):
    """Re-raise numerical failures tagged with the grid point that caused them."""
    class _Ctx:
        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            if isinstance(exc, ConvergenceError):
                raise ConvergenceError(f"at theta={theta:g}: {exc}",
                                       achieved=exc.achieved,
                                       requested=exc.requested) from exc
            return False
    return _Ctx()


def _curve_columns(spec: CurveSpec) -> list[tuple[str, Callable[[float], float]]]:
    """Build (column name, theta -> value) pairs in canonical C, S, E order."""
    tols = spec.tolerances()
    kernel = spec.make_kernel()
    alpha = spec.alpha_value
    routes = ("energy", "partition") if spec.route == "both" else (spec.route,)
    columns: list[tuple[str, Callable[[float], float]]] = []

    def fd_heat(route_name: str) -> Callable[[float], float]:
        route = Prescription(route_name)

        def value(theta: float) -> float:
            return specific_heat_fd(
                lambda t: energy_sum(1.0, kernel, 1.0 / t, route, tol=tols).value,
                theta).value
        return value

    if "C" in spec.quantities:
        for route_name in routes:
            if spec.model == "free":
                if spec.kernel == "ohmic":
                    columns.append(("C_energy",
                                    lambda t: ohmic_specific_heat(t).C))
                else:
                    ratio = spec.cutoff_ratio
                    columns.append(("C_energy",
                                    lambda t, r=ratio: drude_specific_heat(t, r).C))
            elif spec.kernel == "ohmic":
                if route_name == "energy":
                    columns.append(("C_energy",
                                    lambda t, a=alpha: damped_specific_heat(t, a).C))
                else:
                    columns.append(
                        ("C_partition",
                         lambda t, a=alpha: damped_specific_heat_via_entropy(t, a).C))
            else:
                columns.append((f"C_{route_name}", fd_heat(route_name)))

    if "S" in spec.quantities:
        columns.append(("S", lambda t, a=alpha: damped_entropy(t, a).S))

    if "E" in spec.quantities:
        if spec.model == "free":
            columns.append(("E", lambda t: free_energy_internal(t, kernel, tols).value))
        elif spec.kernel == "ohmic":
            columns.append(("E", lambda t: energy_sum(
                1.0, kernel, 1.0 / t, Prescription.ENERGY, tol=tols).value))
        elif spec.route == "both":
            for route_name in routes:
                route = Prescription(route_name)
                columns.append((f"E_{route_name}", lambda t, r=route: energy_sum(
                    1.0, kernel, 1.0 / t, r, tol=tols).value))
        else:
            route = Prescription(spec.route)
            columns.append(("E", lambda t, r=route: energy_sum(
                1.0, kernel, 1.0 / t, r, tol=tols).value))
    return columns


def cmd_curve(spec: CurveSpec) -> list[str]:
    """Render the curve CSV as a list of lines (header, comment, data rows)."""
    spec.validate()
    columns = _curve_columns(spec)
    lines = ["theta," + ",".join(name for name, _ in columns),
             spec.params_comment()]
    for theta in spec.grid():
        theta = float(theta)
        with _annotate(theta):
            values = [fn(theta) for _, fn in columns]
        lines.append(",".join([_fmt(theta)] + [_fmt(v) for v in values]))
    return lines


_FIG1_RATIOS = (0.01, 0.1, 1.0, math.inf)


def cmd_fig1(t_min: float = 1e-3, t_max: float = 10.0,
             points: int = 400) -> tuple[list[str], list[str]]:
    """Free-particle specific-heat figure data: (main lines, inset lines).

    Main: exact strict-ohmic C against the linear-plus-cubic low-temperature
    law.  Inset: C for cutoff ratios 0.01, 0.1, 1, inf (upper to lower at low
    temperature) with the same expansion column.
    """
    if not (0.0 < t_min < t_max and math.isfinite(t_max)) or points < 2:
        raise DomainError("fig1 needs 0 < tmin < tmax and points >= 2")
    grid = np.logspace(math.log10(t_min), math.log10(t_max), points)
    comment = (f"# model=free kernel=ohmic tmin={_fmt(t_min)} tmax={_fmt(t_max)} "
               f"points={points} log=true version={__version__}")

    main = ["theta_gamma,C_exact,C_lowT", comment]
    for theta in grid:
        theta = float(theta)
        main.append(",".join([_fmt(theta), _fmt(ohmic_specific_heat(theta).C),
                              _fmt(ohmic_lowT_expansion(theta))]))

    ratio_names = ["C_cutoff_0.01", "C_cutoff_0.1", "C_cutoff_1", "C_cutoff_inf"]
    inset = ["theta_gamma," + ",".join(ratio_names) + ",C_lowT",
             comment.replace("kernel=ohmic", "kernel=drude_family")]
    for theta in grid:
        theta = float(theta)
        row = [_fmt(theta)]
        row += [_fmt(drude_specific_heat(theta, r).C) for r in _FIG1_RATIOS]
        row.append(_fmt(ohmic_lowT_expansion(theta)))
        inset.append(",".join(row))
    return main, inset


def cmd_compare(spec: CurveSpec) -> dict:
    """Evaluate both prescriptions, their gap, and FD cross-checks per point."""
    spec.validate()
    tols = spec.tolerances()
    kernel = spec.make_kernel()
    omega0 = 1.0 if spec.model == "oscillator" else 0.0

    def energy(theta: float, route: Prescription) -> float:
        return energy_sum(omega0, kernel, 1.0 / theta, route, tol=tols).value

    def closed_heat(theta: float) -> float | None:
        if spec.model == "oscillator":
            if spec.kernel == "ohmic":
                return damped_specific_heat(theta, spec.alpha_value).C
            return None
        if spec.kernel == "ohmic":
            return ohmic_specific_heat(theta).C
        return drude_specific_heat(theta, spec.cutoff_ratio).C

    regularized = spec.kernel == "ohmic" and kernel.gamma > 0.0
    rows = []
    for theta in spec.grid():
        theta = float(theta)
        with _annotate(theta):
            e_direct = energy(theta, Prescription.ENERGY)
            e_partition = energy(theta, Prescription.PARTITION)
            gap = prescription_gap(omega0, kernel, 1.0 / theta, tol=tols).value
            fd_direct = specific_heat_fd(
                lambda t: energy(t, Prescription.ENERGY), theta).value
            fd_partition = specific_heat_fd(
                lambda t: energy(t, Prescription.PARTITION), theta).value
        rows.append({
            "theta": theta,
            "E_direct": e_direct,
            "E_partition": e_partition,
            "gap": gap,
            "C_closed": closed_heat(theta),
            "C_fd_direct": fd_direct,
            "C_fd_partition": fd_partition,
            "status": "regularized" if regularized else "ok",
        })
    return {
        "model": spec.model,
        "kernel": spec.kernel,
        "alpha": None if spec.model == "free" else spec.alpha_value,
        "cutoff_ratio": None if spec.kernel == "ohmic" else spec.cutoff_ratio,
        "tol": spec.tol,
        "version": __version__,
        "points": rows,
    }


def cmd_expansions(model: str, alpha: float | None, t_min: float, t_max: float,
                   points: int, log_grid: bool = True) -> list[str]:
    """Exact vs expansion values with halving-grid error exponents, as CSV lines.

    The exponent column is log2(err(theta) / err(theta/2)): near the stated
    remainder order of each expansion in its own asymptotic regime, and
    meaningless (reported anyway) outside it.
    """
    if model not in _MODELS:
        raise DomainError(f"model must be one of {_MODELS}, got {model!r}")
    if not (0.0 < t_min < t_max and math.isfinite(t_max)) or points < 2:
        raise DomainError("expansions needs 0 < tmin < tmax and points >= 2")
    if model == "free":
        if alpha is not None:
            raise DomainError("alpha has no meaning for the free particle")
        kinds = ("free_lowT",)
    else:
        a = 1.0 if alpha is None else alpha
        if not (a >= 0.0 and math.isfinite(a)):
            raise DomainError(f"alpha must be >= 0 and finite, got {alpha!r}")
        kinds = ("undamped_lowT", "undamped_highT")
        if a > 0.0:
            kinds += ("damped_lowT", "damped_highT")

    def pair(kind: str, theta: float) -> tuple[float, float]:
        if kind == "free_lowT":
            return ohmic_specific_heat(theta).C, ohmic_lowT_expansion(theta)
        if kind.startswith("undamped"):
            return undamped_thermo(theta).C, oscillator_expansion(kind, theta).value
        return (damped_specific_heat(theta, a).C,
                oscillator_expansion(kind, theta, a).value)

    grid = (np.logspace(math.log10(t_min), math.log10(t_max), points)
            if log_grid else np.linspace(t_min, t_max, points))
    alpha_str = "none" if model == "free" or alpha is None else _fmt(alpha)
    lines = ["kind,theta,exact,expansion,abs_error,error_exponent",
             f"# model={model} alpha={alpha_str} tmin={_fmt(t_min)} "
             f"tmax={_fmt(t_max)} points={points} log={str(log_grid).lower()} "
             f"version={__version__}"]
    for kind in kinds:
        for theta in grid:
            theta = float(theta)
            exact, approx = pair(kind, theta)
            err = abs(exact - approx)
            exact_h, approx_h = pair(kind, theta / 2.0)
            err_h = abs(exact_h - approx_h)
            exponent = math.log2(err / err_h) if err > 0.0 and err_h > 0.0 else math.nan
            lines.append(",".join([kind, _fmt(theta), _fmt(exact), _fmt(approx),
                                   _fmt(err), _fmt(exponent)]))
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbrownian",
        description="Equilibrium thermodynamics of damped quantum oscillators "
                    "and free quantum Brownian particles")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_grid(sp, t_min: float, t_max: float, points: int):
        sp.add_argument("--tmin", type=float, default=t_min,
                        help="lowest reduced temperature")
        sp.add_argument("--tmax", type=float, default=t_max,
                        help="highest reduced temperature")
        sp.add_argument("--points", type=int, default=points, help="grid size")

    def add_model(sp):
        sp.add_argument("--model", choices=_MODELS, required=True)
        sp.add_argument("--kernel", choices=_KERNELS, default="ohmic")
        sp.add_argument("--alpha", type=float, default=None,
                        help="gamma/omega0 (oscillator only; default 1)")
        sp.add_argument("--cutoff-ratio", type=float, default=None,
                        help="omega_D/gamma (drude kernel only)")

    curve = sub.add_parser("curve", help="thermodynamic quantities on a grid")
    add_model(curve)
    add_grid(curve, 0.01, 10.0, 100)
    curve.add_argument("--log", action="store_true", help="log-spaced grid")
    curve.add_argument("--route", choices=_ROUTES, default="energy")
    curve.add_argument("--quantities", default="C",
                       help="comma-separated subset of C,S,E")
    curve.add_argument("--out", default=None, help="output CSV path (default stdout)")
    curve.add_argument("--tol", type=float, default=1e-12,
                       help="relative tail tolerance for frequency sums")

    fig1 = sub.add_parser("fig1", help="free-particle figure data (main + inset)")
    add_grid(fig1, 1e-3, 10.0, 400)
    fig1.add_argument("--out", default="fig1",
                      help="output prefix; writes <out>_main.csv and <out>_inset.csv")

    compare = sub.add_parser("compare", help="both prescriptions and their gap")
    add_model(compare)
    add_grid(compare, 0.1, 10.0, 20)
    compare.add_argument("--log", action="store_true")
    compare.add_argument("--out", default=None, help="output JSON path (default stdout)")
    compare.add_argument("--tol", type=float, default=1e-12)

    expansions = sub.add_parser("expansions", help="limit expansions vs exact values")
    expansions.add_argument("--model", choices=_MODELS, required=True)
    expansions.add_argument("--alpha", type=float, default=None)
    add_grid(expansions, 0.01, 20.0, 40)
    expansions.add_argument("--log", action="store_true", default=True)
    expansions.add_argument("--out", default=None)
    return parser


def _write_lines(lines: Iterable[str], path: str | None, stream: TextIO) -> None:
    text = "\n".join(lines) + "\n"
    if path is None:
        stream.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _spec_from_args(args: argparse.Namespace) -> CurveSpec:
    raw = {part.strip() for part in getattr(args, "quantities", "C").split(",")
           if part.strip()}
    unknown = raw - set(_QUANTITIES)
    if unknown:
        raise DomainError(f"unknown quantities {sorted(unknown)}; "
                          f"choose from {_QUANTITIES}")
    quantities = tuple(q for q in _QUANTITIES if q in raw)
    cutoff = args.cutoff_ratio
    if args.kernel == "drude" and cutoff is None:
        cutoff = 10.0
    return CurveSpec(model=args.model, kernel=args.kernel, alpha=args.alpha,
                     cutoff_ratio=cutoff, t_min=args.tmin, t_max=args.tmax,
                     points=args.points, log_grid=getattr(args, "log", True),
                     route=getattr(args, "route", "energy"),
                     quantities=quantities or ("C",), tol=args.tol)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "curve":
            _write_lines(cmd_curve(_spec_from_args(args)), args.out, sys.stdout)
        elif args.command == "fig1":
            main_lines, inset_lines = cmd_fig1(args.tmin, args.tmax, args.points)
            _write_lines(main_lines, f"{args.out}_main.csv", sys.stdout)
            _write_lines(inset_lines, f"{args.out}_inset.csv", sys.stdout)
        elif args.command == "compare":
            report = cmd_compare(_spec_from_args(args))
            payload = json.dumps(report, indent=2, allow_nan=False)
            _write_lines([payload], args.out, sys.stdout)
        else:
            lines = cmd_expansions(args.model, args.alpha, args.tmin, args.tmax,
                                   args.points, getattr(args, "log", True))
            _write_lines(lines, args.out, sys.stdout)
    except DomainError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, DivergenceError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
