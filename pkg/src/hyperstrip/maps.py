"""Closed-form harmonic self-maps of the hyperbolic strip.

The strip {(x, y) : 0 < y < pi} carries the conformal metric
(dx^2 + dy^2)/sin^2(y).  This module evaluates the two-parameter family of
harmonic maps u = (R, S) of the ansatz

    R(x, y) = alpha x + h(y),        S(x, y) = g(y),

whose components reduce to Jacobi elliptic functions:

    g(y)  = arccot(w cs(alpha w y | m)),         arccot ranging over (0, pi),
    h(y)  = a^2 y / (1 - w^2)
            - a^2 / (alpha w (1 - w^2)) * Pi(1 - 1/w^2; alpha w y | m),

with h identically zero when a = 0.  The constant block is derived from
(alpha, a, b):

    c^2 = alpha^2 + b^2 + a^4,
    w   = sqrt((c^2 + sqrt(c^4 - 4 alpha^2 b^2)) / (2 alpha^2)),
    cos(lambda) = b / (alpha w^2),   m = sin^2(lambda),

which is exactly the factorization
alpha^2 z^4 + c^2 z^2 + b^2 = alpha^2 (z^2 + (w cos lambda)^2)(z^2 + w^2)
of the quartic governing the auxiliary coordinate z(y) = cot(g(y)) =
w cs(alpha w y | m).  Here a^2 = h'(pi/2) and b = g'(pi/2) are the midline
derivatives; they parameterize boundary data once the solver module has
matched them (boundary values R(x,0) = alpha x, R(x,pi) = alpha x + beta,
S(x,0) = 0, S(x,pi) = pi).

The boundary-offset-free family (beta = 0, so h = 0 and R = alpha x) is
handled by its own parameter record; its angular component is
g(y) = arccot(cs(alpha y | 1 - (b/alpha)^2)), the a = 0 specialization.

All evaluators are pure functions over frozen parameter records and may be
called concurrently.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import NamedTuple

from . import elliptic
from .errors import PoleError

__all__ = [
    "StripMapParams",
    "ZeroOffsetParams",
    "MapSample",
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
]

_PI = math.pi
_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class StripMapParams:
    """Constant block defining one member of the strip-map family.

    ``beta`` is the boundary offset R(x, pi) - R(x, 0); it is None until a
    solver (or the caller) fixes it, since the closed forms themselves only
    need (alpha, a, b) and the derived constants.
    """

    alpha: float
    a: float
    b: float
    c: float
    w: float
    lam: float
    m: float
    beta: float | None = None

    def with_beta(self, beta: float) -> "StripMapParams":
        return dataclasses.replace(self, beta=beta)


@dataclass(frozen=True)
class ZeroOffsetParams:
    """Parameters of the offset-free family (beta = 0, h = 0, R = alpha x)."""

    alpha: float
    b: float
    m: float


class MapSample(NamedTuple):
    """Map data at a single ordinate y."""

    y: float
    g: float
    h: float
    g_prime: float
    h_prime: float


def derive_params(alpha: float, a: float, b: float) -> StripMapParams:
    """Derive the constant block (c, w, lambda, m) from (alpha, a, b).

    The discriminant c^4 - 4 alpha^2 b^2 is evaluated in the factored form
    ((alpha - b)^2 + a^4)((alpha + b)^2 + a^4), which is nonnegative by
    inspection and avoids cancellation, and m is taken as
    sqrt(disc) / (alpha^2 w^2) = sin^2(lambda) for the same reason.
    """
    if alpha <= 0.0:
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    if a < 0.0:
        raise ValueError(f"a must be nonnegative, got {a!r}")
    if b <= 0.0:
        raise ValueError(f"b must be positive, got {b!r}")
    a4 = a ** 4
    c_sq = alpha * alpha + b * b + a4
    disc = ((alpha - b) ** 2 + a4) * ((alpha + b) ** 2 + a4)
    root = math.sqrt(disc)
    w_sq = (c_sq + root) / (2.0 * alpha * alpha)
    w = math.sqrt(w_sq)
    m = root / (alpha * alpha * w_sq)
    cos_lam = b / (alpha * w_sq)
    # cos(lambda) <= 1 analytically (equality only at a = 0, b = alpha), and
    # m < 1 strictly; clip the rounding overshoot at both corners.
    cos_lam = min(cos_lam, 1.0)
    m = min(max(m, 0.0), math.nextafter(1.0, 0.0))
    return StripMapParams(
        alpha=alpha,
        a=a,
        b=b,
        c=math.sqrt(c_sq),
        w=w,
        lam=math.acos(cos_lam),
        m=m,
    )


def zero_offset_params(alpha: float, b: float) -> ZeroOffsetParams:
    """Parameter record for the offset-free family, m = 1 - (b/alpha)^2."""
    if alpha <= 0.0:
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    if not 0.0 < b <= alpha:
        raise ValueError(f"b must satisfy 0 < b <= alpha, got b={b!r}, alpha={alpha!r}")
    ratio = b / alpha
    return ZeroOffsetParams(alpha=alpha, b=b, m=1.0 - ratio * ratio)


def _cos_lambda(params: StripMapParams) -> float:
    # recovered from the constants rather than trig on lam (no cancellation
    # when lambda is near 0)
    return params.b / (params.alpha * params.w ** 2)


def eval_z(params: StripMapParams, y: float) -> float:
    """Auxiliary coordinate z(y) = w cs(alpha w y | m) = cot(g(y)).

    Positive on (0, pi/2), zero at the midline for matched constants, and
    negative on (pi/2, pi).

    Raises:
        PoleError: at y = 0 and y = pi, where z diverges (strip boundary).
    """
    if y <= 0.0 or y >= _PI:
        raise PoleError(f"z(y) has poles at the strip boundary; got y = {y!r}")
    u = params.alpha * params.w * y
    sn, cn, _ = elliptic.jacobi_sn_cn_dn(u, params.m)
    if sn == 0.0:
        raise PoleError(f"z(y) pole: sn(alpha w y) vanishes at y = {y!r}")
    return params.w * cn / sn


def eval_g(params: StripMapParams, y: float) -> float:
    """Angular component g(y) = arccot(w cs(alpha w y | m)), range (0, pi).

    The boundary and midline values g(0) = 0, g(pi/2) = pi/2, g(pi) = pi are
    substituted exactly; for matched constants they are the analytic limits.
    """
    if not 0.0 <= y <= _PI:
        raise ValueError(f"y must lie in [0, pi], got {y!r}")
    if y == 0.0:
        return 0.0
    if y == _HALF_PI:
        return _HALF_PI
    if y == _PI:
        return _PI
    u = params.alpha * params.w * y
    sn, cn, _ = elliptic.jacobi_sn_cn_dn(u, params.m)
    if sn < 0.0:  # arccot depends on the ratio cn/sn only
        sn, cn = -sn, -cn
    return math.atan2(sn, params.w * cn)


def eval_g_prime(params: StripMapParams, y: float) -> float:
    """Derivative of the angular component,

    g'(y) = alpha w^2 dn(alpha w y|m) / (w^2 cn^2 + sn^2),

    positive on [0, pi] and equal to b at the midline for matched constants.
    """
    if not 0.0 <= y <= _PI:
        raise ValueError(f"y must lie in [0, pi], got {y!r}")
    u = params.alpha * params.w * y
    sn, cn, dn = elliptic.jacobi_sn_cn_dn(u, params.m)
    w_sq = params.w ** 2
    return params.alpha * w_sq * dn / (w_sq * cn * cn + sn * sn)


def eval_h(params: StripMapParams, y: float) -> float:
    """Translation component h(y); identically zero when a = 0.

    For a > 0 (hence w > 1),

        h(y) = a^2 y/(1 - w^2) - a^2/(alpha w (1 - w^2)) Pi(1 - 1/w^2; alpha w y|m),

    which is nonnegative and nondecreasing since h' = a^2 sin^2(g).  At y = pi
    the stored beta is returned when available (exact boundary substitution).
    """
    if not 0.0 <= y <= _PI:
        raise ValueError(f"y must lie in [0, pi], got {y!r}")
    if params.a == 0.0:
        return 0.0
    if y == 0.0:
        return 0.0
    if y == _PI and params.beta is not None:
        return params.beta
    a_sq = params.a ** 2
    w = params.w
    n = 1.0 - 1.0 / (w * w)
    u = params.alpha * w * y
    pi_val = elliptic.ellint_Pi_arg(n, u, params.m)
    scale = a_sq / (1.0 - w * w)
    return scale * (y - pi_val / (params.alpha * w))


def eval_h_prime(params: StripMapParams, y: float) -> float:
    """Derivative of the translation component,

    h'(y) = a^2 sn^2(alpha w y|m) / (w^2 cn^2 + sn^2) = a^2 sin^2(g(y)),

    zero at the boundary ordinates and a^2 at the midline.
    """
    if not 0.0 <= y <= _PI:
        raise ValueError(f"y must lie in [0, pi], got {y!r}")
    if params.a == 0.0:
        return 0.0
    u = params.alpha * params.w * y
    sn, cn, _ = elliptic.jacobi_sn_cn_dn(u, params.m)
    w_sq = params.w ** 2
    return params.a ** 2 * sn * sn / (w_sq * cn * cn + sn * sn)


def eval_map(params: StripMapParams, x: float, y: float) -> tuple[float, float]:
    """Full map (R, S) = (alpha x + h(y), g(y)) at a point of the strip."""
    return params.alpha * x + eval_h(params, y), eval_g(params, y)


def zero_offset_g(params: ZeroOffsetParams, y: float) -> float:
    """Angular component of the offset-free family,

    g(y) = arccot(cs(alpha y | 1 - (b/alpha)^2)),  arccot ranging over (0, pi),

    which equals arcsin(sn(alpha y|m)) on [0, pi/2] and extends continuously
    with g(pi) = pi.  The boundary values g(0) = 0, g(pi/2) = pi/2, g(pi) = pi
    pinned by the boundary problem are substituted exactly.
    """
    if not 0.0 <= y <= _PI:
        raise ValueError(f"y must lie in [0, pi], got {y!r}")
    if y == 0.0:
        return 0.0
    if y == _HALF_PI:
        return _HALF_PI
    if y == _PI:
        return _PI
    sn, cn, _ = elliptic.jacobi_sn_cn_dn(params.alpha * y, params.m)
    if sn < 0.0:
        sn, cn = -sn, -cn
    return math.atan2(sn, cn)


def extend_symmetric(params: StripMapParams, y: float) -> MapSample:
    """Sample of the map on (pi/2, pi] built from the midline reflection

        g(y) = pi - g(pi - y),   h(y) = beta - h(pi - y),

    with g'(y) = g'(pi - y) and h'(y) = h'(pi - y).  For matched constants
    this agrees with direct evaluation of the closed forms, since
    sn(2K - t) = sn(t) and dn(2K - t) = dn(t).

    Requires params.beta to be set (fully solved parameters).
    """
    if not _HALF_PI < y <= _PI:
        raise ValueError(f"symmetric extension needs y in (pi/2, pi], got {y!r}")
    if params.beta is None:
        raise ValueError("extend_symmetric requires solved parameters (beta set)")
    y_ref = _PI - y
    return MapSample(
        y=y,
        g=_PI - eval_g(params, y_ref),
        h=params.beta - eval_h(params, y_ref),
        g_prime=eval_g_prime(params, y_ref),
        h_prime=eval_h_prime(params, y_ref),
    )
