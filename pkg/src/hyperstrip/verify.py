"""Independent numerical certification of the closed-form maps.

Four kinds of oracle, none of which shares a code path with the
Landen/Carlson evaluators under test:

* ODE residuals: the reduced Euler-Lagrange system
      h'' - 2 cot(g) g' h' = 0,
      g'' + cot(g)(alpha^2 + (h')^2 - (g')^2) = 0,
  with second derivatives taken by central differences of the closed-form
  first derivatives.
* PDE residuals: the full harmonic-map system on the strip,
      Lap R - 2 cot(S) <grad R, grad S> = 0,
      Lap S + cot(S)(<grad R, grad R> - <grad S, grad S>) = 0,
  via 5-point Laplacians and central gradients of (R, S).
* Quadrature inversion: recover z(y) by bisecting the defining relation
      integral_0^z dz / sqrt(alpha^2 z^4 + c^2 z^2 + b^2) = pi/2 - y
  with adaptive Gauss-Kronrod quadrature.
* ODE shooting: fixed-step RK4 integration of the second-order system from
  the midline data g(pi/2) = pi/2, g'(pi/2) = b, h(pi/2) = beta/2,
  h'(pi/2) = a^2, outward in both directions.

Residual grids stay 0.05 away from y = 0 and y = pi, where cot(g) diverges;
boundary behavior is certified separately by the exact substitutions in the
map module.  All checks are deterministic and independent of each other.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Sequence

from . import elliptic, maps
from .errors import ConvergenceError
from .numerics import adaptive_quad, bisect_root, rk4_segment

__all__ = [
    "VerifyReport",
    "ode_residuals",
    "zero_offset_ode_residual",
    "zero_offset_first_integral",
    "zero_offset_boundary_values",
    "pde_residuals",
    "quadrature_z_oracle",
    "ode_shoot_oracle",
    "z_oracle_check",
    "shooting_check",
    "derivative_check",
    "run_strip_checks",
    "run_zero_offset_checks",
    "default_residual_grid",
]

_PI = math.pi
_HALF_PI = 0.5 * math.pi
_STANDOFF = 0.05  # minimum distance of residual grids from the cot(g) poles


@dataclass(frozen=True)
class VerifyReport:
    """One check outcome; passed iff max_residual <= tolerance."""

    check_name: str
    grid_spec: str
    max_residual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _report(name: str, grid_spec: str, max_residual: float, tolerance: float) -> VerifyReport:
    return VerifyReport(name, grid_spec, max_residual, tolerance, max_residual <= tolerance)


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    if n < 2:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def default_residual_grid(n: int = 101) -> list[float]:
    """Interior y grid keeping the standard standoff from the strip boundary."""
    return _linspace(_STANDOFF, _PI - _STANDOFF, n)


def _check_grid(grid: Sequence[float]) -> None:
    if not grid:
        raise ValueError("residual grid is empty")
    lo, hi = min(grid), max(grid)
    if lo < _STANDOFF - 1e-12 or hi > _PI - _STANDOFF + 1e-12:
        raise ValueError(
            f"residual grid must stay within [{_STANDOFF}, pi - {_STANDOFF}] "
            f"(cot(g) poles at the boundary); got range [{lo!r}, {hi!r}]"
        )


def ode_residuals(
    params: maps.StripMapParams,
    grid: Sequence[float],
    *,
    fd_step: float = 1e-5,
    tolerance: float = 1e-5,
) -> VerifyReport:
    """Residuals of the reduced Euler-Lagrange system along the grid.

    g, h', g' come from the closed forms; g'' and h'' are central differences
    of the closed-form first derivatives at step ``fd_step``.
    """
    _check_grid(grid)
    alpha_sq = params.alpha ** 2
    worst = 0.0
    for y in grid:
        g = maps.eval_g(params, y)
        gp = maps.eval_g_prime(params, y)
        hp = maps.eval_h_prime(params, y)
        gpp = (maps.eval_g_prime(params, y + fd_step) - maps.eval_g_prime(params, y - fd_step)) / (2.0 * fd_step)
        hpp = (maps.eval_h_prime(params, y + fd_step) - maps.eval_h_prime(params, y - fd_step)) / (2.0 * fd_step)
        cot_g = math.cos(g) / math.sin(g)
        res_h = hpp - 2.0 * cot_g * gp * hp
        res_g = gpp + cot_g * (alpha_sq + hp * hp - gp * gp)
        worst = max(worst, abs(res_h), abs(res_g))
    spec = f"y in [{min(grid):.6g}, {max(grid):.6g}], {len(grid)} points, fd step {fd_step:g}"
    return _report("ode-residuals", spec, worst, tolerance)


def _zero_offset_g_prime(params: maps.ZeroOffsetParams, y: float) -> float:
    # g'(y) = alpha dn(alpha y|m), valid across the whole strip
    _, _, dn = elliptic.jacobi_sn_cn_dn(params.alpha * y, params.m)
    return params.alpha * dn


def zero_offset_ode_residual(
    params: maps.ZeroOffsetParams,
    grid: Sequence[float],
    *,
    fd_step: float = 1e-5,
    tolerance: float = 1e-5,
) -> VerifyReport:
    """Residual of g'' + cot(g)(alpha^2 - (g')^2) = 0 for the offset-free family."""
    _check_grid(grid)
    alpha_sq = params.alpha ** 2
    worst = 0.0
    for y in grid:
        g = maps.zero_offset_g(params, y)
        gp = _zero_offset_g_prime(params, y)
        gpp = (_zero_offset_g_prime(params, y + fd_step) - _zero_offset_g_prime(params, y - fd_step)) / (2.0 * fd_step)
        cot_g = math.cos(g) / math.sin(g)
        worst = max(worst, abs(gpp + cot_g * (alpha_sq - gp * gp)))
    spec = f"y in [{min(grid):.6g}, {max(grid):.6g}], {len(grid)} points, fd step {fd_step:g}"
    return _report("zero-offset-ode-residual", spec, worst, tolerance)


def zero_offset_first_integral(
    params: maps.ZeroOffsetParams,
    grid: Sequence[float],
    *,
    tolerance: float = 1e-9,
) -> VerifyReport:
    """First integral of the offset-free equation,

    (g')^2 - alpha^2 = (b^2 - alpha^2) sin^2(g),

    checked pointwise along the grid.
    """
    _check_grid(grid)
    coeff = params.b ** 2 - params.alpha ** 2
    alpha_sq = params.alpha ** 2
    worst = 0.0
    for y in grid:
        g = maps.zero_offset_g(params, y)
        gp = _zero_offset_g_prime(params, y)
        worst = max(worst, abs(gp * gp - alpha_sq - coeff * math.sin(g) ** 2))
    spec = f"y in [{min(grid):.6g}, {max(grid):.6g}], {len(grid)} points"
    return _report("zero-offset-first-integral", spec, worst, tolerance)


def zero_offset_boundary_values(params: maps.ZeroOffsetParams) -> VerifyReport:
    """Exactness of the pinned boundary values g(0) = 0, g(pi/2) = pi/2, g(pi) = pi."""
    worst = max(
        abs(maps.zero_offset_g(params, 0.0)),
        abs(maps.zero_offset_g(params, _HALF_PI) - _HALF_PI),
        abs(maps.zero_offset_g(params, _PI) - _PI),
    )
    return _report("zero-offset-boundary-values", "y in {0, pi/2, pi}", worst, 0.0)


def pde_residuals(
    params: maps.StripMapParams,
    x_grid: Sequence[float],
    y_grid: Sequence[float],
    step: float = 2.0 ** -13,
    *,
    tolerance: float = 1e-4,
) -> VerifyReport:
    """Residuals of the full harmonic-map system on a tensor grid.

    Five-point Laplacians and central-difference gradients are applied to the
    map (R, S) itself.  ``step`` must lie in [1e-6, 1e-3]; the default is a
    power of two so the x-stencil of the linear term alpha x cancels exactly.
    """
    if not 1e-6 <= step <= 1e-3:
        raise ValueError(f"finite-difference step must lie in [1e-6, 1e-3], got {step!r}")
    _check_grid(y_grid)
    if not x_grid:
        raise ValueError("x grid is empty")
    inv_2s = 1.0 / (2.0 * step)
    inv_s2 = 1.0 / (step * step)
    worst = 0.0
    for y in y_grid:
        for x in x_grid:
            R0, S0 = maps.eval_map(params, x, y)
            Rxp, Sxp = maps.eval_map(params, x + step, y)
            Rxm, Sxm = maps.eval_map(params, x - step, y)
            Ryp, Syp = maps.eval_map(params, x, y + step)
            Rym, Sym = maps.eval_map(params, x, y - step)
            lap_R = (Rxp + Rxm + Ryp + Rym - 4.0 * R0) * inv_s2
            lap_S = (Sxp + Sxm + Syp + Sym - 4.0 * S0) * inv_s2
            Rx = (Rxp - Rxm) * inv_2s
            Ry = (Ryp - Rym) * inv_2s
            Sx = (Sxp - Sxm) * inv_2s
            Sy = (Syp - Sym) * inv_2s
            cot_S = math.cos(S0) / math.sin(S0)
            res_R = lap_R - 2.0 * cot_S * (Rx * Sx + Ry * Sy)
            res_S = lap_S + cot_S * (Rx * Rx + Ry * Ry - Sx * Sx - Sy * Sy)
            worst = max(worst, abs(res_R), abs(res_S))
    spec = (
        f"x in [{min(x_grid):.6g}, {max(x_grid):.6g}] x y in "
        f"[{min(y_grid):.6g}, {max(y_grid):.6g}], {len(x_grid)}x{len(y_grid)} points, "
        f"step {step:g}"
    )
    return _report("pde-residuals", spec, worst, tolerance)


def quadrature_z_oracle(params: maps.StripMapParams, y: float) -> float:
    """Invert the defining relation of z(y) numerically.

    Finds z >= 0 with integral_0^z dz / sqrt(alpha^2 z^4 + c^2 z^2 + b^2)
    = pi/2 - y by bisection over z with adaptive quadrature; independent of
    the elliptic evaluators.  Valid for y in (0, pi/2].
    """
    if not 0.0 < y <= _HALF_PI:
        raise ValueError(f"z oracle needs y in (0, pi/2], got {y!r}")
    target = _HALF_PI - y
    if target == 0.0:
        return 0.0
    al_sq = params.alpha ** 2
    b_sq = params.b ** 2
    c_sq = params.c ** 2

    def integrand(z: float) -> float:
        z2 = z * z
        return 1.0 / math.sqrt((al_sq * z2 + c_sq) * z2 + b_sq)

    def sweep(z: float) -> float:
        return adaptive_quad(integrand, 0.0, z, tol=1e-12)

    z_hi = 1.0
    doublings = 0
    while sweep(z_hi) < target:
        z_hi *= 2.0
        doublings += 1
        if doublings > 200:
            raise ConvergenceError(f"z bracket expansion failed at y = {y!r}")
    root, _ = bisect_root(
        lambda z: sweep(z) - target, 0.0, z_hi, xtol=1e-10 * max(1.0, z_hi)
    )
    return root


def ode_shoot_oracle(
    params: maps.StripMapParams,
    y_grid: Sequence[float],
    *,
    max_step: float = 1e-4,
) -> list[maps.MapSample]:
    """Shoot the second-order system from the midline and sample the grid.

    Classical RK4 at fixed step <= ``max_step`` integrates outward from
    (g, g', h, h')(pi/2) = (pi/2, b, beta/2, a^2) in both directions, landing
    exactly on every requested ordinate.  Requires solved parameters.
    """
    _check_grid(y_grid)
    if params.beta is None:
        raise ValueError("shooting needs solved parameters (beta set)")
    alpha_sq = params.alpha ** 2

    def rhs(t: float, state: Sequence[float]) -> tuple[float, float, float, float]:
        g, gp, h, hp = state
        cot_g = math.cos(g) / math.sin(g)
        return (gp, -cot_g * (alpha_sq + hp * hp - gp * gp), hp, 2.0 * cot_g * gp * hp)

    initial = (_HALF_PI, params.b, 0.5 * params.beta, params.a ** 2)
    solutions: dict[float, tuple[float, ...]] = {}
    for direction_grid in (
        sorted((y for y in y_grid if y >= _HALF_PI)),
        sorted((y for y in y_grid if y < _HALF_PI), reverse=True),
    ):
        t = _HALF_PI
        state = initial
        for y in direction_grid:
            state = rk4_segment(rhs, t, state, y, max_step)
            solutions[y] = state
            t = y
    return [
        maps.MapSample(y=y, g=solutions[y][0], h=solutions[y][2],
                       g_prime=solutions[y][1], h_prime=solutions[y][3])
        for y in y_grid
    ]


# --------------------------------------------------------------------------
# Aggregated pass/fail checks (CLI surface)
# --------------------------------------------------------------------------

_Z_ORACLE_Y = (0.3, 0.55, 0.8, 1.05, 1.3, _HALF_PI)


def z_oracle_check(
    params: maps.StripMapParams,
    y_values: Sequence[float] = _Z_ORACLE_Y,
    *,
    tolerance: float = 1e-8,
) -> VerifyReport:
    """Quadrature inversion of z against the closed form, |dz| <= tolerance."""
    worst = 0.0
    for y in y_values:
        z_quad = quadrature_z_oracle(params, y)
        z_closed = 0.0 if y == _HALF_PI else maps.eval_z(params, y)
        worst = max(worst, abs(z_quad - z_closed))
    spec = f"y in [{min(y_values):.6g}, {max(y_values):.6g}], {len(y_values)} points"
    return _report("z-quadrature-inversion", spec, worst, tolerance)


def shooting_check(
    params: maps.StripMapParams,
    grid: Sequence[float],
    *,
    tolerance: float = 1e-7,
    max_step: float = 1e-4,
) -> VerifyReport:
    """RK4 shooting against the closed forms, max |dg|, |dh| <= tolerance."""
    samples = ode_shoot_oracle(params, grid, max_step=max_step)
    worst = 0.0
    for sample in samples:
        worst = max(
            worst,
            abs(sample.g - maps.eval_g(params, sample.y)),
            abs(sample.h - maps.eval_h(params, sample.y)),
        )
    spec = f"y in [{min(grid):.6g}, {max(grid):.6g}], {len(grid)} points, rk4 step {max_step:g}"
    return _report("rk4-shooting", spec, worst, tolerance)


def derivative_check(
    params: maps.StripMapParams,
    grid: Sequence[float],
    *,
    fd_step: float = 1e-6,
    tolerance: float = 1e-6,
) -> VerifyReport:
    """Central differences of g and h against the closed-form derivatives
    (relative error)."""
    _check_grid(grid)
    worst = 0.0
    for y in grid:
        fd_g = (maps.eval_g(params, y + fd_step) - maps.eval_g(params, y - fd_step)) / (2.0 * fd_step)
        fd_h = (maps.eval_h(params, y + fd_step) - maps.eval_h(params, y - fd_step)) / (2.0 * fd_step)
        gp = maps.eval_g_prime(params, y)
        hp = maps.eval_h_prime(params, y)
        worst = max(worst, abs(fd_g - gp) / max(abs(gp), 1e-12))
        if params.a != 0.0:
            worst = max(worst, abs(fd_h - hp) / max(abs(hp), 1e-12))
    spec = f"y in [{min(grid):.6g}, {max(grid):.6g}], {len(grid)} points, fd step {fd_step:g}"
    return _report("derivative-consistency", spec, worst, tolerance)


def run_strip_checks(
    params: maps.StripMapParams,
    *,
    ode_tol: float = 1e-5,
    pde_tol: float = 1e-4,
    shoot_tol: float = 1e-7,
    z_tol: float = 1e-8,
    deriv_tol: float = 1e-6,
) -> list[VerifyReport]:
    """Full certification suite for one solved strip map."""
    y_grid = default_residual_grid(101)
    pde_y = _linspace(_STANDOFF, _PI - _STANDOFF, 20)
    pde_x = _linspace(0.0, 2.0, 5)
    shoot_grid = default_residual_grid(25)
    return [
        ode_residuals(params, y_grid, tolerance=ode_tol),
        pde_residuals(params, pde_x, pde_y, tolerance=pde_tol),
        shooting_check(params, shoot_grid, tolerance=shoot_tol),
        z_oracle_check(params, tolerance=z_tol),
        derivative_check(params, y_grid, tolerance=deriv_tol),
    ]


def run_zero_offset_checks(
    params: maps.ZeroOffsetParams,
    *,
    ode_tol: float = 1e-5,
    first_integral_tol: float = 1e-9,
) -> list[VerifyReport]:
    """Certification suite for one offset-free map."""
    y_grid = default_residual_grid(101)
    return [
        zero_offset_ode_residual(params, y_grid, tolerance=ode_tol),
        zero_offset_first_integral(params, y_grid, tolerance=first_integral_tol),
        zero_offset_boundary_values(params),
    ]
