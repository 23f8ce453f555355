"""
Command-line front end.

Exit codes: 0 success, 2 bad flags, 3 domain error, 4 verification failure,
5 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Sequence

import numpy as np

from . import bcs, eta, figures
from . import free_fermion as ff
from .core import InputDomainError, NumericError
from .verify import SUITES, run_checks

EXIT_OK = 0
EXIT_FLAGS = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4
EXIT_IO = 5


class _FlagError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _FlagError(message)


def _number(x) -> float | int | str:
    if isinstance(x, (bool, np.bool_)):
        return int(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        return str(x)
    # 12 significant digits, no negative zero
    return float(f"{x:.12g}") + 0.0


def _cell(x) -> str:
    v = x if isinstance(x, str) else _number(x)
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def write_table(header: Sequence[str], rows, fmt: str, stream) -> None:
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(x) for x in row])
    else:
        for row in rows:
            obj = {k: (x if isinstance(x, str) else _number(x)) for k, x in zip(header, row)}
            stream.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _beta(args) -> float:
    if args.T is not None and args.beta is not None:
        raise InputDomainError("give either --T or --beta, not both")
    if args.T is not None:
        if args.T < 0:
            raise InputDomainError(f"--T={args.T} must be >= 0")
        return math.inf if args.T == 0 else 1.0 / args.T
    if args.beta is not None:
        return args.beta
    return math.inf


def _parse_modes(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InputDomainError(f"--modes must be comma-separated integers, got {text!r}")


def cmd_eigenstate(args):
    p = ff.ModelParams(args.L, args.t, args.mu)
    state = ff.EigenstateSpec(_parse_modes(args.modes))
    c = ff.eigenstate_correlator(p, state)
    C = ff.eigenstate_concurrence(p, state)
    header = ["L", "N", "n", "S_re", "S_im", "S_abs", "nn", "energy", "concurrence"]
    row = (p.L, state.N, c.n_mean, c.S.real, c.S.imag, abs(c.S), c.nn,
           ff.eigenstate_energy(p, state), C)
    return header, [row]


def cmd_ground(args):
    if args.L is not None:
        if args.N is None:
            raise InputDomainError("finite-lattice ground state needs --N")
        p = ff.ModelParams(args.L, args.t)
        state = ff.ground_state_modes(p, args.N)
        c = ff.eigenstate_correlator(p, state)
        header = ["L", "N", "n", "S_abs", "concurrence"]
        return header, [(p.L, state.N, c.n_mean, abs(c.S), ff.eigenstate_concurrence(p, state))]
    if args.n is not None:
        fillings = [args.n]
    else:
        fillings = figures.closed_grid(0.0, 1.0, args.steps)
    rows = [
        (n, ff.ground_state_correlator_infinite(n), ff.ground_state_concurrence_infinite(n))
        for n in fillings
    ]
    return ["n", "S", "concurrence"], rows


def cmd_thermal(args):
    header = ["L", "t", "mu", "T", "n_mean", "S_re", "S_im", "nn", "concurrence"]
    if args.T_max is not None:
        temps = list(figures.temperature_grid(args.T_max, args.steps))
        betas = [1.0 / T for T in temps]
    else:
        betas = [_beta(args)]
    rows = []
    for beta in betas:
        p = ff.ModelParams(args.L, args.t, args.mu, beta)
        c = ff.thermal_correlators(p)
        rows.append((p.L, p.t, p.mu, p.temperature, c.n_mean, c.S.real, c.S.imag, c.nn,
                     ff.thermal_concurrence(p)))
    return header, rows


def cmd_bcs(args):
    header = ["eps", "T", "Delta", "concurrence", "residual"]
    if args.T_max is not None:
        betas = [1.0 / T for T in figures.temperature_grid(args.T_max, args.steps)]
    else:
        betas = [_beta(args)]
    rows = []
    for beta in betas:
        if args.delta is None:
            point = bcs.solve_gap(args.eps, beta, args.phi)
        else:
            point = bcs.BcsPoint(args.eps, args.delta, args.phi, beta)
        rows.append((point.epsilon_k, point.temperature, point.delta_abs,
                     bcs.bcs_thermal_concurrence(point),
                     bcs.gap_self_consistency_residual(point)))
    return header, rows


def cmd_eta(args):
    state = eta.EtaNumberState(args.L, args.N)
    row = (state.L, state.N, eta.odlro_correlator(state), eta.eta_concurrence(state))
    return ["L", "N", "odlro", "concurrence"], [row]


def cmd_figure(args):
    key = figures.normalize_id(args.id)
    steps = 200 if args.steps is None else args.steps
    if key == "fig1":
        return figures.fig1(steps)
    if key == "fig2":
        return figures.fig2(args.t, args.T_max, steps)
    if key == "fig3":
        return figures.fig3(args.L or 100, args.t, tuple(args.mu), args.T_max, steps)
    if key == "fig4":
        return figures.fig4(0.0, args.T_max or 0.3, steps)
    if key == "fig5":
        return figures.fig5(0.0, steps)
    return figures.table1(args.beta, args.t)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = _Parser(
        prog="fermient",
        description="Pairwise concurrence of local fermionic modes.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eigenstate", parents=[common], help="ring eigenstate |k_N>")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--modes", required=True, help="occupied modes, e.g. 1,2,3")
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--mu", type=float, default=0.0)
    p.set_defaults(func=cmd_eigenstate)

    p = sub.add_parser("ground", parents=[common], help="ground-state concurrence")
    p.add_argument("--n", type=float, help="filling of the infinite lattice")
    p.add_argument("--steps", type=int, default=200, help="filling grid steps when --n is absent")
    p.add_argument("--L", type=int, help="finite ring size instead of the infinite lattice")
    p.add_argument("--N", type=int, help="particle number on the finite ring")
    p.add_argument("--t", type=float, default=1.0)
    p.set_defaults(func=cmd_ground)

    p = sub.add_parser("thermal", parents=[common], help="grand-canonical thermal state")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--mu", type=float, default=0.0)
    p.add_argument("--beta", type=float)
    p.add_argument("--T", type=float)
    p.add_argument("--T-max", dest="T_max", type=float, help="sweep T over (0, T_max]")
    p.add_argument("--steps", type=int, default=200)
    p.set_defaults(func=cmd_thermal)

    p = sub.add_parser("bcs", parents=[common], help="pairing model for one k, -k pair")
    p.add_argument("--eps", type=float, default=0.0)
    p.add_argument("--delta", type=float, help="fixed |Delta| (default: solve the gap equation)")
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--beta", type=float)
    p.add_argument("--T", type=float)
    p.add_argument("--T-max", dest="T_max", type=float, help="sweep T over (0, T_max]")
    p.add_argument("--steps", type=int, default=200)
    p.set_defaults(func=cmd_bcs)

    p = sub.add_parser("eta", parents=[common], help="eta-pairing number state")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("figure", parents=[common], help="figure / table data")
    p.add_argument("--id", required=True, help="1-5, fig1-fig5 or table1")
    p.add_argument("--steps", type=int)
    p.add_argument("--T-max", dest="T_max", type=float)
    p.add_argument("--L", type=int, help="ring size for fig3 (default 100)")
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--mu", type=float, nargs="+", default=[0.1, 1.0, 2.0],
                   help="chemical potentials for fig3")
    p.add_argument("--beta", type=float, default=1.0, help="inverse temperature for table1")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", parents=[common], help="closed forms vs Fock-space oracle")
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--max-L", dest="max_L", type=int, default=6)
    p.set_defaults(func=None)
    return parser


def _open_output(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _run_verify(args, stream) -> int:
    if not 2 <= args.max_L <= 12:
        raise InputDomainError(f"--max-L={args.max_L} outside 2..12")
    results = list(run_checks(args.suite, args.max_L))
    rows = [(r.name, r.deviation, r.tolerance, "pass" if r.passed else "FAIL") for r in results]
    write_table(["check", "max_deviation", "tolerance", "status"], rows, args.format, stream)
    passed = sum(r.passed for r in results)
    for r in results:
        if not r.passed:
            print(f"FAILED {r.name}: max deviation {r.deviation:.3e} > {r.tolerance:.1e}",
                  file=sys.stderr)
    print(f"{passed}/{len(results)} checks passed", file=sys.stderr)
    return EXIT_OK if passed == len(results) else EXIT_VERIFY


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _FlagError as exc:
        print(f"fermient: error: {exc}", file=sys.stderr)
        return EXIT_FLAGS
    try:
        stream, close = _open_output(args.output)
    except OSError as exc:
        print(f"fermient: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        if args.func is None:
            return _run_verify(args, stream)
        header, rows = args.func(args)
        write_table(header, rows, args.format, stream)
        return EXIT_OK
    except (InputDomainError, NumericError) as exc:
        print(f"fermient: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"fermient: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    finally:
        if close:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
