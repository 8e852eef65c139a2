"""Closed-form harmonic self-maps of the hyperbolic strip.

Evaluates the elliptic-function closed forms of the harmonic maps
R = alpha x + h(y), S = g(y) of the strip {0 < y < pi} with metric
(dx^2 + dy^2)/sin^2(y), solves the boundary-constant matching problem, and
certifies the formulas against independent numerical oracles.
"""

from .elliptic import (
    JacobiTriple,
    arcsn,
    ellint_F,
    ellint_K,
    ellint_Kprime,
    ellint_Pi_amp,
    ellint_Pi_arg,
    jacobi_am,
    jacobi_ratio,
    jacobi_sn_cn_dn,
)
from .errors import ConvergenceError, PoleError
from .maps import (
    MapSample,
    StripMapParams,
    ZeroOffsetParams,
    derive_params,
    eval_g,
    eval_g_prime,
    eval_h,
    eval_h_prime,
    eval_map,
    eval_z,
    extend_symmetric,
    zero_offset_g,
    zero_offset_params,
)
from .solve import (
    SolveReport,
    half_offset_integral,
    half_width_integral,
    solve_a,
    solve_b,
    solve_params,
    solve_zero_offset_b,
)
from .verify import (
    VerifyReport,
    derivative_check,
    ode_residuals,
    ode_shoot_oracle,
    pde_residuals,
    quadrature_z_oracle,
    run_strip_checks,
    run_zero_offset_checks,
    shooting_check,
    z_oracle_check,
    zero_offset_first_integral,
    zero_offset_ode_residual,
)

__version__ = "0.1.0"

__all__ = [
    "JacobiTriple",
    "MapSample",
    "StripMapParams",
    "ZeroOffsetParams",
    "SolveReport",
    "VerifyReport",
    "PoleError",
    "ConvergenceError",
    "ellint_K",
    "ellint_Kprime",
    "ellint_F",
    "ellint_Pi_amp",
    "ellint_Pi_arg",
    "jacobi_sn_cn_dn",
    "jacobi_ratio",
    "jacobi_am",
    "arcsn",
    "derive_params",
    "zero_offset_params",
    "eval_z",
    "eval_g",
    "eval_g_prime",
    "eval_h",
    "eval_h_prime",
    "eval_map",
    "zero_offset_g",
    "extend_symmetric",
    "half_width_integral",
    "half_offset_integral",
    "solve_b",
    "solve_a",
    "solve_params",
    "solve_zero_offset_b",
    "ode_residuals",
    "zero_offset_ode_residual",
    "zero_offset_first_integral",
    "pde_residuals",
    "quadrature_z_oracle",
    "ode_shoot_oracle",
    "z_oracle_check",
    "shooting_check",
    "derivative_check",
    "run_strip_checks",
    "run_zero_offset_checks",
]
