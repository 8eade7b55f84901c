"""Command-line front end: ``kgosc {spectrum,wavefunction,normalize,verify,sweep}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error,
4 physical precondition violated.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from typing import Optional

import numpy as np

from .analytic import charge_density_factor, normalization_constant, radial_wavefunction
from .errors import ComplexEnergy, DegenerateDispersion, DomainError, KGOscillatorError, ZeroDensity
from .model import ModelParams, Prescription, QuantumNumbers, energy_levels, lambda_required, make_config
from .solver import GridSpec
from .verify import SCHEMA_VERSION, SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_PHYSICS = 4

SPECTRUM_COLUMNS = ("case", "prescription", "M", "omega", "g", "a", "c", "k", "l", "n_r", "n", "lambda", "E")
NORMALIZE_COLUMNS = ("case", "prescription", "M", "omega", "g", "a", "c", "k", "l", "n_r", "n", "E", "norm")
SWEEP_AXES = ("g", "a", "c", "k", "omega")


class UsageError(Exception):
    pass


def fmt(value) -> str:
    """Fixed CSV formatting: 17 significant digits for floats."""
    if value is None:
        return ""
    if isinstance(value, (bool, str)):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".16e")


def _common(parser: argparse.ArgumentParser, ranges: bool = True) -> None:
    parser.add_argument("--case", choices=("A", "B", "C"), default="A",
                        help="A: v=(a,0,0,0), B: v=(0,0,0,c), C: v=(a,0,0,c) (default: %(default)s)")
    parser.add_argument("--prescription", choices=("corrected", "original"), default="corrected",
                        help="operator ordering (default: %(default)s)")
    parser.add_argument("--M", type=float, default=1.0, help="mass (default: %(default)s)")
    parser.add_argument("--omega", type=float, default=1.0, help="oscillator frequency (default: %(default)s)")
    parser.add_argument("--g", type=float, default=0.0, help="Lorentz-violation coupling (default: %(default)s)")
    parser.add_argument("--a", type=float, default=None, help="v^0, cases A and C only (default: 0)")
    parser.add_argument("--c", type=float, default=None, help="v^z, cases B and C only (default: 0)")
    parser.add_argument("--k", type=float, default=None, help="longitudinal wavenumber (default: 0)")
    if ranges:
        parser.add_argument("--l", type=int, nargs="+", default=[0], help="magnetic quantum numbers (default: 0)")
        parser.add_argument("--nr", type=int, nargs="+", default=[0], help="radial quantum numbers (default: 0)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv", help="output format (default: %(default)s)")
    parser.add_argument("--out", default=None, help="output path (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kgosc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="energy levels for each (l, n_r) and branch")
    _common(p)

    p = sub.add_parser("wavefunction", help="table of r, psi(r), J^0(r) for one mode")
    _common(p)
    p.add_argument("--branch", choices=("plus", "minus"), default="plus", help="energy branch (default: %(default)s)")
    p.add_argument("--r-max", type=float, default=5.0, help="largest sampled radius (default: %(default)s)")
    p.add_argument("--grid-points", type=int, default=51, help="number of radii from 0 to r-max (default: %(default)s)")

    p = sub.add_parser("normalize", help="normalization constants N_n per (l, n_r) and branch")
    _common(p)

    p = sub.add_parser("verify", help="run verification checks and print a JSON report")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--tol", type=float, default=None, help="override the check tolerance")
    p.add_argument("--r-max", type=float, default=None, help="solver grid radius (default: from the tail bound)")
    p.add_argument("--grid-points", type=int, default=None, help="solver grid cells (default: 4000)")
    p.add_argument("--out", default=None, help="output path (default: standard output)")

    p = sub.add_parser("sweep", help="spectrum table along one parameter axis")
    _common(p)
    p.add_argument("--axis", choices=SWEEP_AXES, required=True)
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    return parser


def _model(args, overrides: Optional[dict] = None):
    values = {"M": args.M, "omega": args.omega, "g": args.g, "a": args.a, "c": args.c, "k": args.k}
    if args.case == "A" and args.c is not None:
        raise UsageError("--c is not allowed with --case A")
    if args.case == "B" and args.a is not None:
        raise UsageError("--a is not allowed with --case B")
    values.update(overrides or {})
    values = {key: (0.0 if val is None else val) for key, val in values.items()}
    try:
        params = ModelParams(values["M"], values["omega"], values["g"], values["k"])
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    config = make_config(args.case, values["a"], values["c"])
    return params, config, Prescription.parse(args.prescription)


def _quantum_numbers(args) -> list[QuantumNumbers]:
    try:
        return [QuantumNumbers(l, n_r) for l in args.l for n_r in args.nr]
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _head(params, config, presc) -> dict:
    return {
        "case": config.case, "prescription": presc.name.lower(), "M": params.M, "omega": params.omega,
        "g": params.g, "a": config.a, "c": config.c, "k": params.k,
    }


def spectrum_rows(params, config, presc, qns) -> list[dict]:
    rows = []
    for qn in qns:
        base = dict(_head(params, config, presc), l=qn.l, n_r=qn.n_r, n=qn.n, **{"lambda": lambda_required(params, qn)})
        try:
            levels = energy_levels(params, config, presc, qn)
        except (ComplexEnergy, DegenerateDispersion) as exc:
            rows.append(dict(base, E=None, status=type(exc).__name__))
            continue
        for E in levels.roots:
            rows.append(dict(base, E=E, status="ok"))
    return rows


def render_csv(rows: list[dict], columns) -> str:
    columns = list(columns)
    if any(row.get("status", "ok") != "ok" for row in rows):
        columns.append("status")
    buf = io.StringIO()
    buf.write(",".join(columns) + "\n")
    for row in rows:
        buf.write(",".join(fmt(row.get(col)) for col in columns) + "\n")
    return buf.getvalue()


def render_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _table(rows: list[dict], columns, fmt_name: str) -> str:
    if fmt_name == "json":
        keep = list(columns) + ["status"]
        return render_json({"schema_version": SCHEMA_VERSION,
                            "rows": [{key: row.get(key) for key in keep if key in row} for row in rows]})
    for row in rows:
        row.setdefault("status", "ok")
    return render_csv(rows, columns)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def cmd_spectrum(args) -> int:
    params, config, presc = _model(args)
    rows = spectrum_rows(params, config, presc, _quantum_numbers(args))
    _emit(_table(rows, SPECTRUM_COLUMNS, args.format), args.out)
    return EXIT_OK


def cmd_wavefunction(args) -> int:
    params, config, presc = _model(args)
    qns = _quantum_numbers(args)
    if len(qns) != 1:
        raise UsageError("wavefunction takes a single --l and a single --nr")
    if args.grid_points < 2 or not args.r_max > 0:
        raise UsageError("--grid-points must be >= 2 and --r-max positive")
    qn = qns[0]
    levels = energy_levels(params, config, presc, qn)
    E = levels.e_plus if args.branch == "plus" or levels.e_minus is None else levels.e_minus
    norm = normalization_constant(params, config, qn, E)
    psi = radial_wavefunction(params, qn, norm)
    factor = charge_density_factor(config, E, params.k, params.M, params.g)
    radii = np.linspace(0.0, args.r_max, args.grid_points)
    rows = [{"r": float(r), "psi": float(psi(r)), "j0": float(factor * psi.density(r))} for r in radii]
    if args.format == "json":
        text = render_json({"schema_version": SCHEMA_VERSION, **_head(params, config, presc),
                            "l": qn.l, "n_r": qn.n_r, "E": E, "norm": norm, "rows": rows})
    else:
        text = render_csv(rows, ("r", "psi", "j0"))
    _emit(text, args.out)
    return EXIT_OK


def cmd_normalize(args) -> int:
    params, config, presc = _model(args)
    rows = []
    for qn in _quantum_numbers(args):
        levels = energy_levels(params, config, presc, qn)
        for E in levels.roots:
            rows.append(dict(_head(params, config, presc), l=qn.l, n_r=qn.n_r, n=qn.n, E=E,
                             norm=normalization_constant(params, config, qn, E)))
    _emit(_table(rows, NORMALIZE_COLUMNS, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    grid = None
    if args.r_max is not None or args.grid_points is not None:
        try:
            grid = GridSpec(args.r_max if args.r_max is not None else GridSpec.default(1.0).r_max,
                            args.grid_points if args.grid_points is not None else GridSpec.default(1.0).points)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    reports = run_suite(args.suite, tol=args.tol, grid=grid)
    passed = all(r.passed for r in reports)
    payload = {"schema_version": SCHEMA_VERSION, "suite": args.suite, "passed": passed,
               "reports": [r.to_dict() for r in reports]}
    _emit(render_json(payload), args.out)
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def cmd_sweep(args) -> int:
    if args.steps < 2:
        raise UsageError("--steps must be >= 2")
    if args.axis == "a" and args.case == "B":
        raise UsageError("axis a is not defined for case B")
    if args.axis == "c" and args.case == "A":
        raise UsageError("axis c is not defined for case A")
    values = sorted(np.linspace(args.start, args.stop, args.steps).tolist())
    column = f"sweep_{args.axis}"
    rows = []
    qns = _quantum_numbers(args)
    for value in values:
        if args.axis in ("a", "c"):
            # Bypass the flag-consistency check for the swept component.
            setattr(args, args.axis, value)
        params, config, presc = _model(args, {args.axis: value})
        for row in spectrum_rows(params, config, presc, qns):
            rows.append({column: value, **row})
    _emit(_table(rows, (column,) + SPECTRUM_COLUMNS, args.format), args.out)
    return EXIT_OK


COMMANDS = {
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "normalize": cmd_normalize,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"kgosc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ZeroDensity, ComplexEnergy, DegenerateDispersion) as exc:
        print(f"kgosc: physical precondition violated: {exc}", file=sys.stderr)
        return EXIT_PHYSICS
    except OSError as exc:
        print(f"kgosc: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except KGOscillatorError as exc:
        print(f"kgosc: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
