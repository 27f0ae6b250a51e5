"""Command-line front end.

Every command accepts the same physical-parameter flags, optionally
seeded from a flat key=value config file (flags win over the file).
Output is plot-ready CSV (JSON for `crossings`) on stdout or --out; the
effective parameter set is echoed to stderr for reproducibility. Floats
are printed with 17 significant digits, so identical invocations give
byte-identical output.

Exit status: 0 success, 1 validation or usage error, 2 verification
tolerance exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .errors import BracketingError, DomainError, NormalizationError
from .fields import field_table
from .models import ModelKind, energy, greene_aldrich, wavefunction
from .oracle import verify_states
from .params import PhysicalParams, QuantumState, load_config, params_from_mapping
from .sweeps import SWEEPABLE, SweepSpec, find_crossings, sweep

__all__ = ["run", "main"]

_PARAM_FLAGS = (
    ("--e", "e", "particle charge (signed)"),
    ("--b0", "b0", "magnetic field strength"),
    ("--mu", "mu", "field shape strength"),
    ("--beta", "beta", "field generator offset"),
    ("--sigma", "sigma", "field profile exponent"),
    ("--alpha", "alpha_ab", "Aharonov-Bohm flux ratio"),
    ("--kz", "kz", "axial wavenumber"),
    ("--eta", "eta", "mass scale"),
    ("--delta", "delta", "mass/potential decay rate"),
    ("--v0", "v0", "screened-Coulomb strength"),
    ("--v1", "v1", "inverse-linear potential strength"),
    ("--v2", "v2", "inverse-square potential strength"),
)


def _fmt(x: float) -> str:
    return "%.17g" % float(x)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _param_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("physical parameters")
    for flag, dest, help_text in _PARAM_FLAGS:
        group.add_argument(flag, dest=dest, type=float, default=None, help=help_text)
    parent.add_argument(
        "--config",
        default=None,
        help="flat key=value parameter file; explicit flags override it",
    )
    parent.add_argument("--out", default=None, help="write output to this file instead of stdout")
    return parent


def _resolve_params(args) -> PhysicalParams:
    mapping: dict[str, float] = {}
    if args.config:
        mapping.update(load_config(args.config))
    for _, dest, _ in _PARAM_FLAGS:
        value = getattr(args, dest)
        if value is not None:
            mapping[dest] = value
    params = params_from_mapping(mapping)
    echo = " ".join(f"{dest}={_fmt(getattr(params, dest))}" for _, dest, _ in _PARAM_FLAGS)
    print(f"# params: {echo}", file=sys.stderr)
    return params


def _parse_state(text: str) -> QuantumState:
    parts = text.split(",")
    if len(parts) != 2:
        raise DomainError(f"state must be 'n_rho,m', got {text!r}")
    try:
        n_rho, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise DomainError(f"state must be two integers 'n_rho,m', got {text!r}") from None
    return QuantumState(n_rho=n_rho, m=m)


def _state_range(args) -> list[QuantumState]:
    if args.nrho_max < 0:
        raise DomainError(f"--nrho-max must be >= 0, got {args.nrho_max}")
    if args.m_min > args.m_max:
        raise DomainError(f"--m-min must not exceed --m-max, got {args.m_min} > {args.m_max}")
    return [
        QuantumState(n_rho=n, m=m)
        for n in range(args.nrho_max + 1)
        for m in range(args.m_min, args.m_max + 1)
    ]


def _rho_grid(args) -> np.ndarray:
    if args.points < 2:
        raise DomainError(f"--points must be >= 2, got {args.points}")
    if not 0 < args.rho_min < args.rho_max:
        raise DomainError(
            f"need 0 < --rho-min < --rho-max, got {args.rho_min}, {args.rho_max}"
        )
    return np.linspace(args.rho_min, args.rho_max, args.points)


def _emit(lines, out_path) -> None:
    text = "\n".join(lines) + "\n"
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_spectrum(args) -> int:
    params = _resolve_params(args)
    kind = ModelKind.parse(args.model)
    lines = ["n_rho,m,E"]
    for state in _state_range(args):
        try:
            e = energy(kind, state, params)
        except DomainError as err:
            print(f"# skipped n_rho={state.n_rho} m={state.m}: {err}", file=sys.stderr)
            continue
        lines.append(f"{state.n_rho},{state.m},{_fmt(e)}")
    _emit(lines, args.out)
    return 0


def _cmd_wavefunction(args) -> int:
    params = _resolve_params(args)
    kind = ModelKind.parse(args.model)
    state = _parse_state(args.state)
    rhos = _rho_grid(args)
    extra = {}
    if kind is ModelKind.C:
        extra["form"] = args.form
    elif args.form != "paper":
        raise DomainError("--form applies to model C only")
    r_values = wavefunction(kind, state, params, rhos, component="R", **extra)
    u_values = wavefunction(kind, state, params, rhos, component="U", **extra)
    lines = ["rho,R,U"]
    for rho, r, u in zip(rhos, r_values, u_values):
        lines.append(f"{_fmt(rho)},{_fmt(r)},{_fmt(u)}")
    _emit(lines, args.out)
    return 0


def _cmd_field(args) -> int:
    params = _resolve_params(args)
    rhos = _rho_grid(args)
    lines = ["rho,S,Bz,Aphi"]
    for sample in field_table(rhos, params):
        lines.append(
            f"{_fmt(sample.rho)},{_fmt(sample.s)},{_fmt(sample.b_z)},{_fmt(sample.a_phi)}"
        )
    _emit(lines, args.out)
    return 0


def _cmd_sweep(args) -> int:
    params = _resolve_params(args)
    kind = ModelKind.parse(args.model)
    states = tuple(_parse_state(s) for s in args.state)
    spec = SweepSpec(
        kind=kind, states=states, param_name=args.param, lo=args.lo, hi=args.hi, steps=args.steps
    )
    lines = ["param,value,n_rho,m,E,valid"]
    for row in sweep(spec, params):
        e_text = _fmt(row.energy) if row.valid else ""
        valid_text = "true" if row.valid else "false"
        lines.append(
            f"{row.param_name},{_fmt(row.value)},{row.state.n_rho},{row.state.m},"
            f"{e_text},{valid_text}"
        )
    _emit(lines, args.out)
    return 0


def _cmd_crossings(args) -> int:
    params = _resolve_params(args)
    kind = ModelKind.parse(args.model)
    s1 = _parse_state(args.s1)
    s2 = _parse_state(args.s2)
    points = find_crossings(
        kind, s1, s2, args.param, (args.lo, args.hi), params, scan_steps=args.scan_steps
    )
    records = [
        {
            "param": args.param,
            "value": point.param_value,
            "E": point.energy,
            "state1": {"n_rho": s1.n_rho, "m": s1.m},
            "state2": {"n_rho": s2.n_rho, "m": s2.m},
        }
        for point in points
    ]
    _emit([json.dumps(records, indent=2)], args.out)
    return 0


def _cmd_verify(args) -> int:
    params = _resolve_params(args)
    kind = ModelKind.parse(args.model)
    rows, skipped = verify_states(
        kind, _state_range(args), params, n_points=args.n_points, target=args.target
    )
    for state, reason in skipped:
        print(f"# skipped n_rho={state.n_rho} m={state.m}: {reason}", file=sys.stderr)
    lines = ["n_rho,m,E_closed,E_oracle,abs_err,residual,nodes"]
    worst = 0.0
    for row in rows:
        rel = row.abs_err / max(1e-12, abs(row.e_closed))
        worst = max(worst, rel)
        lines.append(
            f"{row.state.n_rho},{row.state.m},{_fmt(row.e_closed)},{_fmt(row.e_oracle)},"
            f"{_fmt(row.abs_err)},{_fmt(row.residual)},{row.nodes}"
        )
    _emit(lines, args.out)
    if worst > args.tol:
        print(
            f"verification failed: worst relative error {worst:.3e} exceeds {args.tol:.3e}",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_greene_aldrich(args) -> int:
    params = _resolve_params(args)
    if params.delta <= 0:
        raise DomainError("greene-aldrich table requires delta > 0")
    rhos = _rho_grid(args)
    table = greene_aldrich(rhos, params.delta)
    lines = ["rho,exact,approx,rel_err"]
    for rho, exact, approx, rel in zip(rhos, table.exact, table.approx, table.rel_err):
        lines.append(f"{_fmt(rho)},{_fmt(exact)},{_fmt(approx)},{_fmt(rel)}")
    _emit(lines, args.out)
    return 0


def _add_rho_flags(parser, rho_min=0.05, rho_max=30.0, points=601) -> None:
    parser.add_argument("--rho-min", type=float, default=rho_min)
    parser.add_argument("--rho-max", type=float, default=rho_max)
    parser.add_argument("--points", type=int, default=points)


def _add_state_range_flags(parser) -> None:
    parser.add_argument("--nrho-max", type=int, default=2, help="largest n_rho (from 0)")
    parser.add_argument("--m-min", type=int, default=-2)
    parser.add_argument("--m-max", type=int, default=2)


def _build_parser() -> _Parser:
    parent = _param_parent()
    parser = _Parser(prog="pdmag", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[parent], help="closed-form levels as CSV")
    p.add_argument("--model", required=True)
    _add_state_range_flags(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("wavefunction", parents=[parent], help="radial functions R and U as CSV")
    p.add_argument("--model", required=True)
    p.add_argument("--state", required=True, help="'n_rho,m'")
    p.add_argument("--form", choices=("paper", "xi"), default="paper",
                   help="model C only: which closed form to evaluate")
    _add_rho_flags(p)
    p.set_defaults(func=_cmd_wavefunction)

    p = sub.add_parser("field", parents=[parent], help="S, B_z and A_phi as CSV")
    _add_rho_flags(p)
    p.set_defaults(func=_cmd_field)

    p = sub.add_parser("sweep", parents=[parent], help="levels over a parameter grid as CSV")
    p.add_argument("--model", required=True)
    p.add_argument("--state", action="append", required=True,
                   help="'n_rho,m'; repeat for several states")
    p.add_argument("--param", required=True, choices=SWEEPABLE)
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--steps", type=int, default=41)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("crossings", parents=[parent],
                       help="level crossings of two states as JSON")
    p.add_argument("--model", required=True)
    p.add_argument("--s1", required=True, help="'n_rho,m'")
    p.add_argument("--s2", required=True, help="'n_rho,m'")
    p.add_argument("--param", required=True, choices=SWEEPABLE)
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--scan-steps", type=int, default=2001)
    p.set_defaults(func=_cmd_crossings)

    p = sub.add_parser("verify", parents=[parent],
                       help="closed forms vs numerical oracle; exit 2 beyond tolerance")
    p.add_argument("--model", required=True)
    _add_state_range_flags(p)
    p.add_argument("--tol", type=float, default=1e-5, help="relative energy tolerance")
    p.add_argument("--n-points", type=int, default=4000)
    p.add_argument("--target", choices=("exact", "ga"), default=None,
                   help="which equation the oracle solves (default: ga for C, exact otherwise)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("greene-aldrich", parents=[parent],
                       help="quality table of the 1/rho exponential surrogate")
    _add_rho_flags(p, rho_min=0.01, rho_max=2.0, points=200)
    p.set_defaults(func=_cmd_greene_aldrich)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DomainError, NormalizationError, BracketingError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
