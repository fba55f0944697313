"""Command line entry point.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 numeric or I/O failure (no solution, integrator breakdown, unwritable path).
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from .errors import AnnuliError, InvalidArgumentError, UnsupportedCombinationError
from .mesh import PROJECTIONS, tessellate, write_mesh
from .profile import DEFAULT_ODE_TOL
from .report import rows_to_csv, write_report
from .spectrum import DEFAULT_ROOT_TOL, solve_mode, spectrum
from .surface import (
    AnnulusSurface,
    frame_at,
    free_boundary_check,
    first_variation_check,
    mean_curvature_residual,
    noncompactness_report,
    shape_operator,
    sup_second_fundamental_form,
)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


def _global_options(parser, suppress: bool):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--ode-tol", type=float, default=default(None),
                        help="ODE integrator tolerance (default scales with c, at most "
                             f"{DEFAULT_ODE_TOL:g})")
    parser.add_argument("--root-tol", type=float, default=default(DEFAULT_ROOT_TOL),
                        help="root solver tolerance on c")
    parser.add_argument("--seed", type=int, default=default(0),
                        help="seed for randomized check points")


def _resolution(text: str):
    try:
        a, b = text.lower().split("x")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"resolution must look like 64x256, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annuli",
        description="Free boundary minimal annuli in S^2_+ x S^1.")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)

    p = sub.add_parser("spectrum", parents=[common], help="table of modes 2..N")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"))

    p = sub.add_parser("solve", parents=[common], help="solve a single mode")
    p.add_argument("--mode", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run the invariant checks on one mode")
    p.add_argument("--mode", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-7, help="mean-curvature tolerance")

    p = sub.add_parser("mesh", parents=[common], help="export a triangle mesh")
    p.add_argument("--mode", type=int, required=True)
    p.add_argument("--projection", choices=PROJECTIONS, default="hemisphere3d")
    p.add_argument("--res", type=_resolution, default=(32, 128), help="n_theta x n_t, e.g. 64x256")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("obj", "ply"))

    p = sub.add_parser("report", parents=[common], help="noncompactness table")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"))
    return parser


def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _status(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if _use_color(sys.stdout):
        return f"\033[{32 if ok else 31}m{word}\033[0m"
    return word


def _cmd_spectrum(args) -> int:
    modes = spectrum(args.n_max, args.root_tol)
    if args.out:
        write_report(modes, args.out, args.format)
    else:
        sys.stdout.write(rows_to_csv(modes))
    return EXIT_OK


def _cmd_solve(args) -> int:
    mode = solve_mode(args.mode, args.root_tol)
    print(f"mode n         = {mode.n}  (sequence index {mode.sequence_index})")
    print(f"c_n            = {mode.c:.17g}")
    print(f"period         = {mode.period:.17g}")
    print(f"r_min          = {mode.r_min:.17g}")
    print(f"sup|A|         = {sup_second_fundamental_form(mode.c_n):.17g}")
    print(f"residual       = {mode.residual:.3g}")
    return EXIT_OK


def run_checks(n: int, tol: float = 1e-7, ode_tol: float | None = None,
               root_tol: float = DEFAULT_ROOT_TOL, seed: int = 0):
    """``[(name, value, threshold, passed)]`` for the verification suite on mode n."""
    rng = np.random.default_rng(seed)
    s = AnnulusSurface.from_mode(n, ode_tol=ode_tol, root_tol=root_tol)
    prof = s.profile
    checks = []

    def add(name, value, threshold):
        checks.append((name, float(value), threshold, bool(value < threshold)))

    add("H residual (1e5 samples)", mean_curvature_residual(s, 100_000), tol)
    add("first-integral drift", prof.first_integral_drift(), 1e-9)
    closure = max(abs(prof.r[-1] - prof.r[0]), abs(prof.r_prime[-1] - prof.r_prime[0]))
    add("closure after 2 pi", closure, 1e-7)

    ts = rng.uniform(0.0, 2.0 * math.pi, 64)
    add("free boundary", max(free_boundary_check(s, ts)), 1e-12)

    gram = 0.0
    route = 0.0
    for theta, t in zip(rng.uniform(0.0, math.pi, 64), ts):
        gram = max(gram, float(np.max(np.abs(frame_at(s, theta, t).gram() - np.eye(3)))))
        route = max(route, shape_operator(s, theta, t).route_gap)
    add("frame orthonormality", gram, 1e-12)
    add("curvature route agreement", route, 1e-6)

    bumps = [lambda t: np.cos(3 * t), lambda t: np.sin(t) + 0.5, lambda t: np.sin(2 * t) ** 2]
    fv = max(abs(first_variation_check(s, b)) for b in bumps)
    add("first variation", fv, 1e-5)
    return checks


def _cmd_verify(args) -> int:
    checks = run_checks(args.mode, args.tol, args.ode_tol, args.root_tol, args.seed)
    for name, value, threshold, ok in checks:
        print(f"{_status(ok)}  {name:<28} {value:.3e}  (< {threshold:g})")
    return EXIT_OK if all(c[3] for c in checks) else EXIT_VERIFY


def _cmd_mesh(args) -> int:
    s = AnnulusSurface.from_mode(args.mode, args.ode_tol, args.root_tol, integrate=False)
    mesh = tessellate(s, args.res[0], args.res[1], args.projection)
    write_mesh(mesh, args.out, args.format)
    print(f"wrote {mesh.n_vertices} vertices, {mesh.n_faces} faces to {args.out}")
    return EXIT_OK


def _cmd_report(args) -> int:
    rows = noncompactness_report(args.n_max, root_tol=args.root_tol)
    write_report(rows, args.out, args.format)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "mesh": _cmd_mesh,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (InvalidArgumentError, UnsupportedCombinationError) as exc:
        print(f"annuli: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except AnnuliError as exc:
        print(f"annuli: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
