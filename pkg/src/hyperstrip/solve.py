"""Boundary-constant matching for the strip-map family.

The closed forms in :mod:`hyperstrip.maps` produce a harmonic map for any
(alpha, a, b), but the strip boundary data

    R(x, 0) = alpha x,  R(x, pi) = alpha x + beta,  S(x, 0) = 0,  S(x, pi) = pi

pins the constants.  Two scalar conditions do the matching:

* half-width condition - z(y) must sweep (0, infinity) as y runs over
  (0, pi/2), i.e.

      integral_0^inf dz / sqrt(alpha^2 z^4 + c^2 z^2 + b^2) = pi/2,

  which after the substitution chain is exactly the quarter-period relation
  K(m) = alpha w pi/2.  Given (alpha, a) there is a unique b > 0 satisfying
  it, with b <= max(2 alpha, 1/alpha).

* half-offset condition - the midline value of the translation component
  must be half the boundary offset,

      a^2 integral_0^inf dz / ((1+z^2) sqrt(alpha^2 z^4 + c^2 z^2 + b^2))
          = h(pi/2) = beta/2,

  which fixes a >= 0 given (alpha, beta), with a = 0 exactly when beta = 0.

Roots are found by bracketed bisection on the quarter-period residual (the
integral conditions are kept as independent quadrature cross-checks); the
outer solve iterates on a with a full inner solve for b at every step, since
the half-offset integral presumes the half-width condition already holds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import maps
from .elliptic import _K_from_complement, ellint_K, ellint_Pi_arg
from .errors import ConvergenceError
from .numerics import adaptive_quad, bisect_root

__all__ = [
    "SolveReport",
    "half_width_integral",
    "half_offset_integral",
    "solve_b",
    "solve_a",
    "solve_params",
    "solve_zero_offset_b",
]

_HALF_PI = 0.5 * math.pi

# quadrature tolerance for the improper integrals (absolute)
_QUAD_TOL = 1e-11
# allowed disagreement between quadrature and the analytic reductions
_CROSS_CHECK_TOL = 1e-9
# bisection bracket tolerance
_XTOL = 1e-13


@dataclass(frozen=True)
class SolveReport:
    """Outcome of the boundary-constant solve for one (alpha, beta) pair.

    residual_K is |K(m) - alpha w pi/2| at the returned constants and
    residual_beta is |2 h(pi/2) - beta| through the closed form; ``converged``
    requires residual_K <= 1e-10 and residual_beta <= 1e-9.
    """

    alpha: float
    beta: float
    a: float
    b: float
    residual_K: float
    residual_beta: float
    iterations: int
    converged: bool


def _check_signs(alpha: float, a: float, b: float) -> None:
    if alpha <= 0.0:
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    if a < 0.0:
        raise ValueError(f"a must be nonnegative, got {a!r}")
    if b <= 0.0:
        raise ValueError(f"b must be positive, got {b!r}")


def _quarter_period_residual(alpha: float, a: float, b: float) -> float:
    """K(m) - alpha w pi/2 evaluated through the complementary parameter.

    cos(lambda) = b/(alpha w^2) feeds K directly via m' = cos^2(lambda), so
    the residual stays well conditioned even where m rounds to 1.
    """
    p = maps.derive_params(alpha, a, b)
    cos_lam = b / (alpha * p.w ** 2)
    return _K_from_complement(cos_lam * cos_lam) - alpha * p.w * _HALF_PI


def half_width_integral(alpha: float, a: float, b: float) -> float:
    """Improper integral of the half-width condition,

    integral_0^inf dz / sqrt(alpha^2 z^4 + c^2 z^2 + b^2),  c^2 = alpha^2+b^2+a^4.

    The tail is mapped by z -> 1/z onto [0, 1] (which swaps the roles of
    alpha and b in the quartic), leaving two smooth finite integrands.  The
    value is cross-checked against its analytic reduction K(m)/(alpha w).
    """
    _check_signs(alpha, a, b)
    c_sq = alpha * alpha + b * b + a ** 4
    al_sq = alpha * alpha
    b_sq = b * b

    def head(z: float) -> float:
        z2 = z * z
        return 1.0 / math.sqrt((al_sq * z2 + c_sq) * z2 + b_sq)

    def tail(z: float) -> float:
        z2 = z * z
        return 1.0 / math.sqrt((b_sq * z2 + c_sq) * z2 + al_sq)

    value = adaptive_quad(head, 0.0, 1.0, tol=_QUAD_TOL) + adaptive_quad(
        tail, 0.0, 1.0, tol=_QUAD_TOL
    )
    p = maps.derive_params(alpha, a, b)
    cos_lam = b / (alpha * p.w ** 2)
    reduction = _K_from_complement(cos_lam * cos_lam) / (alpha * p.w)
    if abs(value - reduction) > _CROSS_CHECK_TOL:
        raise ConvergenceError(
            f"half-width quadrature {value!r} disagrees with its analytic "
            f"reduction K(m)/(alpha w) = {reduction!r}"
        )
    return value


def half_offset_integral(alpha: float, a: float, b: float) -> float:
    """Improper integral of the half-offset condition,

    a^2 integral_0^inf dz / ((1+z^2) sqrt(alpha^2 z^4 + c^2 z^2 + b^2)),

    equal to the midline value h(pi/2) of the translation component.  Uses
    the same z -> 1/z tail substitution and cross-checks the quadrature
    against the closed form.
    """
    _check_signs(alpha, a, b)
    if a == 0.0:
        return 0.0
    c_sq = alpha * alpha + b * b + a ** 4
    al_sq = alpha * alpha
    b_sq = b * b

    def head(z: float) -> float:
        z2 = z * z
        return 1.0 / ((1.0 + z2) * math.sqrt((al_sq * z2 + c_sq) * z2 + b_sq))

    def tail(z: float) -> float:
        z2 = z * z
        return z2 / ((1.0 + z2) * math.sqrt((b_sq * z2 + c_sq) * z2 + al_sq))

    value = a * a * (
        adaptive_quad(head, 0.0, 1.0, tol=_QUAD_TOL)
        + adaptive_quad(tail, 0.0, 1.0, tol=_QUAD_TOL)
    )
    # Closed-form twin: the integral equals h at the ordinate where g reaches
    # pi/2, namely y = K/(alpha w), so in closed form
    # a^2 (K - Pi(1 - 1/w^2; K|m)) / (alpha w (1 - w^2)).  Once the half-width
    # condition K = alpha w pi/2 holds this is exactly h(pi/2).  Skipped when
    # m rounds within 1e-13 of 1, where the stored parameter no longer
    # resolves K; the quadrature itself never involves m.
    p = maps.derive_params(alpha, a, b)
    if p.m < 1.0 - 1e-13:
        w_sq = p.w ** 2
        K = ellint_K(p.m)
        pi_K = ellint_Pi_arg(1.0 - 1.0 / w_sq, K, p.m)
        closed = a * a * (K - pi_K) / (alpha * p.w * (1.0 - w_sq))
        if abs(value - closed) > _CROSS_CHECK_TOL:
            raise ConvergenceError(
                f"half-offset quadrature {value!r} disagrees with the closed "
                f"form {closed!r}"
            )
    return value


def solve_b(alpha: float, a: float) -> float:
    """The unique b > 0 making (alpha, a, b) satisfy the half-width condition.

    Root-finds the quarter-period residual K(m) - alpha w pi/2 (cheap and
    monotone through the bracket) rather than the improper integral; the two
    vanish together.  The bracket upper end starts at the analytic bound
    max(2 alpha, 1/alpha).
    """
    if alpha <= 0.0:
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    if a < 0.0:
        raise ValueError(f"a must be nonnegative, got {a!r}")
    b, _ = _solve_b_counted(alpha, a)
    return b


def _solve_b_counted(alpha: float, a: float) -> tuple[float, int]:
    def residual(b: float) -> float:
        return _quarter_period_residual(alpha, a, b)

    b_hi = max(2.0 * alpha, 1.0 / alpha)
    expansions = 0
    while residual(b_hi) > 0.0:
        # analytically unreachable (the root obeys b <= max(2 alpha, 1/alpha));
        # expand defensively rather than assume.
        b_hi *= 2.0
        expansions += 1
        if expansions > 8:
            raise ConvergenceError(
                f"no sign change for the half-width residual up to b = {b_hi!r} "
                f"(alpha = {alpha!r}, a = {a!r})"
            )
    b_lo = 1e-8 * b_hi
    while residual(b_lo) <= 0.0:
        b_lo *= 1e-2
        if b_lo < 1e-250:
            raise ConvergenceError(
                f"could not bracket the half-width residual near b = 0 "
                f"(alpha = {alpha!r}, a = {a!r})"
            )
    return bisect_root(residual, b_lo, b_hi, xtol=_XTOL)


def solve_a(alpha: float, beta: float) -> SolveReport:
    """Match both boundary constants for the data (alpha, beta).

    Outer bisection on a against the half-offset integral, with a full inner
    solve of b at every evaluation; beta = 0 short-circuits to a = 0.  The
    search range for a doubles until the integral exceeds beta/2.
    """
    if alpha <= 0.0:
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    if beta < 0.0:
        raise ValueError(f"beta must be nonnegative, got {beta!r}")

    if beta == 0.0:
        a = 0.0
        b, iterations = _solve_b_counted(alpha, a)
    else:

        def offset_residual(a: float) -> float:
            if a == 0.0:
                return -beta
            b = solve_b(alpha, a)
            return 2.0 * half_offset_integral(alpha, a, b) - beta

        a_hi = 1.0
        doublings = 0
        while offset_residual(a_hi) <= 0.0:
            a_hi *= 2.0
            doublings += 1
            if doublings > 50:
                raise ConvergenceError(
                    f"offset beta = {beta!r} not reached for a up to {a_hi!r}"
                )
        a, outer_iterations = bisect_root(offset_residual, 0.0, a_hi, xtol=_XTOL)
        b, inner_iterations = _solve_b_counted(alpha, a)
        iterations = outer_iterations + inner_iterations

    params = maps.derive_params(alpha, a, b).with_beta(beta)
    residual_K = abs(_quarter_period_residual(alpha, a, b))
    residual_beta = abs(2.0 * maps.eval_h(params, _HALF_PI) - beta)
    return SolveReport(
        alpha=alpha,
        beta=beta,
        a=a,
        b=b,
        residual_K=residual_K,
        residual_beta=residual_beta,
        iterations=iterations,
        converged=residual_K <= 1e-10 and residual_beta <= 1e-9,
    )


def solve_params(alpha: float, beta: float) -> maps.StripMapParams:
    """Solve the boundary constants and return the full parameter record."""
    report = solve_a(alpha, beta)
    return maps.derive_params(alpha, report.a, report.b).with_beta(beta)


def solve_zero_offset_b(alpha: float) -> float:
    """Midline slope b for the offset-free family: K(1 - (b/alpha)^2) = alpha pi/2.

    Solvable only for alpha >= 1, because K >= pi/2 for every parameter in
    [0, 1); b = alpha exactly when alpha = 1.

    Raises:
        ValueError: for alpha < 1 (no real parameter meets the constraint).
    """
    if alpha < 1.0:
        raise ValueError(
            f"no offset-free map for alpha = {alpha!r}: the constraint "
            f"K(1 - (b/alpha)^2) = alpha pi/2 needs alpha >= 1 since K >= pi/2"
        )

    def residual(b: float) -> float:
        ratio = b / alpha
        return _K_from_complement(ratio * ratio) - alpha * _HALF_PI

    b_lo = 1e-8 * alpha
    while residual(b_lo) <= 0.0:
        b_lo *= 1e-2
        if b_lo < 1e-250:
            raise ConvergenceError(
                f"could not bracket the offset-free constraint for alpha = {alpha!r}"
            )
    root, _ = bisect_root(residual, b_lo, alpha, xtol=_XTOL)
    return root
