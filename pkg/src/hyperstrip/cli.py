"""Command-line interface.

Subcommands
-----------
solve        match the boundary constants for (alpha, beta)
eval         evaluate the map (R, S) at one point
grid         stream a CSV of map values over a rectangle
verify       run the numerical certification suite
zero-offset  solve and sample the offset-free family (beta = 0, R = alpha x)

Data goes to stdout, diagnostics to stderr.  Output is byte-identical for
identical invocations (no timestamps unless --timed, which writes to stderr).
Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass

from . import maps, solve, verify
from .elliptic import ellint_K
from .errors import ConvergenceError, PoleError

__all__ = ["GridRequest", "main"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3


@dataclass(frozen=True)
class GridRequest:
    """Rectangle and resolution for the grid command."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int

    def __post_init__(self) -> None:
        if self.nx < 2 or self.ny < 2:
            raise ValueError(f"nx and ny must be at least 2, got {self.nx}, {self.ny}")
        if not (0.0 <= self.y_min <= self.y_max <= math.pi):
            raise ValueError(
                f"y range must satisfy 0 <= y_min <= y_max <= pi, got "
                f"[{self.y_min!r}, {self.y_max!r}]"
            )
        if self.x_min > self.x_max:
            raise ValueError(f"x range is empty: [{self.x_min!r}, {self.x_max!r}]")


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def _params_from_args(args: argparse.Namespace) -> maps.StripMapParams:
    """Build parameters from flags; explicit --a/--b override the solver."""
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise ValueError("explicit constants need both --a and --b")
        params = maps.derive_params(args.alpha, args.a, args.b)
        return params.with_beta(2.0 * maps.eval_h(params, math.pi / 2.0))
    return solve.solve_params(args.alpha, args.beta)


def _param_payload(params: maps.StripMapParams) -> dict:
    return {
        "alpha": params.alpha,
        "beta": params.beta,
        "a": params.a,
        "b": params.b,
        "c": params.c,
        "w": params.w,
        "lambda": params.lam,
        "m": params.m,
        "K": ellint_K(params.m),
    }


def _print_aligned(payload: dict) -> None:
    width = max(len(key) for key in payload)
    for key, value in payload.items():
        if isinstance(value, bool):
            text = "true" if value else "false"
        elif isinstance(value, float):
            text = _fmt(value)
        else:
            text = str(value)
        print(f"{key:<{width}} = {text}")


def _cmd_solve(args: argparse.Namespace) -> int:
    report = solve.solve_a(args.alpha, args.beta)
    params = maps.derive_params(args.alpha, report.a, report.b).with_beta(args.beta)
    payload = _param_payload(params)
    payload.update(
        residual_K=report.residual_K,
        residual_beta=report.residual_beta,
        iterations=report.iterations,
        converged=report.converged,
    )
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        _print_aligned(payload)
    return EXIT_OK if report.converged else EXIT_NO_CONVERGENCE


def _cmd_eval(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    R, S = maps.eval_map(params, args.x, args.y)
    payload = {"x": args.x, "y": args.y, "R": R, "S": S}
    if args.derivatives:
        payload["g_prime"] = maps.eval_g_prime(params, args.y)
        payload["h_prime"] = maps.eval_h_prime(params, args.y)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        _print_aligned(payload)
    return EXIT_OK


def _cmd_grid(args: argparse.Namespace) -> int:
    request = GridRequest(
        x_min=args.x_min, x_max=args.x_max,
        y_min=args.y_min, y_max=args.y_max,
        nx=args.nx, ny=args.ny,
    )
    params = _params_from_args(args)
    xs = [request.x_min + (request.x_max - request.x_min) * i / (request.nx - 1)
          for i in range(request.nx)]
    ys = [request.y_min + (request.y_max - request.y_min) * j / (request.ny - 1)
          for j in range(request.ny)]
    out = sys.stdout
    out.write("x,y,R,S,g_prime,h_prime\n")
    for y in ys:  # row-major: y varies slowest
        g = maps.eval_g(params, y)
        h = maps.eval_h(params, y)
        gp = maps.eval_g_prime(params, y)
        hp = maps.eval_h_prime(params, y)
        for x in xs:
            out.write(
                f"{_fmt(x)},{_fmt(y)},{_fmt(params.alpha * x + h)},"
                f"{_fmt(g)},{_fmt(gp)},{_fmt(hp)}\n"
            )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.zero_offset:
        if args.beta != 0.0:
            raise ValueError("--zero-offset verifies the beta = 0 family; drop --beta")
        b = solve.solve_zero_offset_b(args.alpha)
        zparams = maps.zero_offset_params(args.alpha, b)
        checks = verify.run_zero_offset_checks(zparams, ode_tol=args.ode_tol)
        header = {"family": "zero-offset", "alpha": args.alpha, "b": b, "m": zparams.m}
    else:
        params = _params_from_args(args)
        checks = verify.run_strip_checks(
            params,
            ode_tol=args.ode_tol,
            pde_tol=args.pde_tol,
            shoot_tol=args.shoot_tol,
            z_tol=args.z_tol,
        )
        header = {"family": "strip", **_param_payload(params)}
    all_passed = all(check.passed for check in checks)
    if args.json:
        payload = dict(header)
        payload["checks"] = [check.to_dict() for check in checks]
        payload["passed"] = all_passed
        print(json.dumps(payload, indent=2))
    else:
        for check in checks:
            status = "PASS" if check.passed else "FAIL"
            print(
                f"{status} {check.check_name}: max_residual={_fmt(check.max_residual)} "
                f"tolerance={_fmt(check.tolerance)} ({check.grid_spec})"
            )
        print("overall: " + ("PASS" if all_passed else "FAIL"))
    return EXIT_OK if all_passed else EXIT_CHECK_FAILED


def _cmd_zero_offset(args: argparse.Namespace) -> int:
    b = solve.solve_zero_offset_b(args.alpha)
    params = maps.zero_offset_params(args.alpha, b)
    samples = [
        (k * math.pi / 8.0, maps.zero_offset_g(params, k * math.pi / 8.0))
        for k in range(9)
    ]
    if args.json:
        payload = {
            "alpha": args.alpha,
            "b": b,
            "m": params.m,
            "K": ellint_K(params.m),
            "samples": [{"y": y, "g": g} for y, g in samples],
        }
        print(json.dumps(payload, indent=2))
    else:
        _print_aligned({"alpha": args.alpha, "b": b, "m": params.m, "K": ellint_K(params.m)})
        for y, g in samples:
            print(f"g({_fmt(y)}) = {_fmt(g)}")
    return EXIT_OK


def _add_param_flags(parser: argparse.ArgumentParser, with_overrides: bool = True) -> None:
    parser.add_argument("--alpha", type=float, required=True, help="boundary slope alpha > 0")
    parser.add_argument("--beta", type=float, default=0.0, help="boundary offset beta >= 0 (default 0)")
    if with_overrides:
        parser.add_argument("--a", type=float, default=None,
                            help="explicit constant a (overrides solving; needs --b)")
        parser.add_argument("--b", type=float, default=None,
                            help="explicit constant b (overrides solving; needs --a)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperstrip",
        description="Closed-form harmonic self-maps of the hyperbolic strip: "
                    "boundary-constant solving, evaluation, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="match the boundary constants for (alpha, beta)")
    _add_param_flags(p_solve, with_overrides=False)
    p_solve.add_argument("--json", action="store_true", help="emit a JSON document")
    p_solve.set_defaults(handler=_cmd_solve)

    p_eval = sub.add_parser("eval", help="evaluate the map at one point")
    _add_param_flags(p_eval)
    p_eval.add_argument("--x", type=float, required=True)
    p_eval.add_argument("--y", type=float, required=True, help="ordinate in [0, pi]")
    p_eval.add_argument("--derivatives", action="store_true", help="also print g' and h'")
    p_eval.add_argument("--json", action="store_true", help="emit a JSON document")
    p_eval.set_defaults(handler=_cmd_eval)

    p_grid = sub.add_parser("grid", help="stream CSV rows x,y,R,S,g_prime,h_prime")
    _add_param_flags(p_grid)
    p_grid.add_argument("--x-min", type=float, default=0.0)
    p_grid.add_argument("--x-max", type=float, default=1.0)
    p_grid.add_argument("--y-min", type=float, default=0.0)
    p_grid.add_argument("--y-max", type=float, default=math.pi)
    p_grid.add_argument("--nx", type=int, default=2, help="columns in x (>= 2)")
    p_grid.add_argument("--ny", type=int, default=2, help="rows in y (>= 2)")
    p_grid.set_defaults(handler=_cmd_grid)

    p_verify = sub.add_parser("verify", help="run the certification suite")
    _add_param_flags(p_verify)
    p_verify.add_argument("--zero-offset", action="store_true",
                          help="verify the offset-free family instead")
    p_verify.add_argument("--ode-tol", type=float, default=1e-5)
    p_verify.add_argument("--pde-tol", type=float, default=1e-4)
    p_verify.add_argument("--shoot-tol", type=float, default=1e-7)
    p_verify.add_argument("--z-tol", type=float, default=1e-8)
    p_verify.add_argument("--json", action="store_true", help="emit a JSON document")
    p_verify.set_defaults(handler=_cmd_verify)

    p_zero = sub.add_parser("zero-offset", help="solve the offset-free family (alpha >= 1)")
    p_zero.add_argument("--alpha", type=float, required=True)
    p_zero.add_argument("--json", action="store_true", help="emit a JSON document")
    p_zero.set_defaults(handler=_cmd_zero_offset)

    parser.add_argument("--timed", action="store_true",
                        help="report elapsed wall time on stderr")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        code = args.handler(args)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (ValueError, PoleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.timed:
        print(f"elapsed_s={time.perf_counter() - started:.3f}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
