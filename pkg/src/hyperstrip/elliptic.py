"""Jacobi elliptic functions and Legendre elliptic integrals on the real domain.

Conventions
-----------
All functions take the *parameter* m (not the modulus k = sqrt(m)), restricted
to 0 <= m < 1.  The incomplete integral of the first kind is

    F(theta|m) = integral_0^theta dphi / sqrt(1 - m sin^2(phi)),

the real quarter period is K(m) = F(pi/2|m), and the complementary parameter
is m' = 1 - m.  The amplitude am(u|m) is the angle theta with F(theta|m) = u,
and the basic Jacobi functions are sn = sin(am), cn = cos(am),
dn = sqrt(1 - m sn^2).  Ratio functions follow the glued-letter convention:
pq = pr/qr for letters p, q, r drawn from {s, c, d, n}, with pp = 1 and the
letter n standing for the constant function 1 (so cs = cn/sn, sc = sn/cn).

The incomplete integral of the third kind is supported in both of its usual
forms, which differ only in the integration variable:

    amplitude form  Pi(n; theta|m) = integral_0^theta
                        dphi / ((1 - n sin^2 phi) sqrt(1 - m sin^2 phi)),
    argument form   Pi(n; u|m)     = integral_0^u dt / (1 - n sn^2(t|m)),

related through theta = am(u|m).  The characteristic must satisfy n < 1, which
keeps the integrand free of singularities.

Evaluation strategy
-------------------
Complete integrals use the arithmetic-geometric mean,
K = pi / (2 agm(1, sqrt(m'))).  The Jacobi triple is computed by a descending
Landen transformation on function values after reducing the argument modulo
the period lattice (4K for sn/cn, 2K for dn) with quadrant sign tables.
Incomplete F and Pi use Carlson's symmetric integrals R_F, R_C, R_J with full
duplication, e.g. F(theta|m) = sin(theta) R_F(cos^2 theta, 1 - m sin^2 theta, 1).
Each scheme is independently checkable by direct quadrature of the defining
integral; the test suite does exactly that.

Everything is a pure function of its arguments; there is no shared state and
all operations are safe to call concurrently.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import PoleError

__all__ = [
    "JacobiTriple",
    "ellint_K",
    "ellint_Kprime",
    "ellint_F",
    "ellint_Pi_amp",
    "ellint_Pi_arg",
    "jacobi_sn_cn_dn",
    "jacobi_ratio",
    "jacobi_am",
    "arcsn",
]

# Landen descent stops when |a - b| <= _LANDEN_TOL * a; the truncation error
# enters squared, so 1e-8 already saturates double precision.
_LANDEN_TOL = 1e-8
# Relative slack accepted (and clamped away) at interval endpoints, so that
# arguments like alpha*w*pi landing a rounding error past 2K stay valid.
_EDGE_SLACK = 1e-9

_RATIO_LETTERS = frozenset("scdn")


class JacobiTriple(NamedTuple):
    """Values of sn, cn, dn at a common argument and parameter.

    Satisfies sn^2 + cn^2 = 1 and dn^2 + m sn^2 = 1 to rounding accuracy,
    with sqrt(1 - m) <= dn <= 1.
    """

    sn: float
    cn: float
    dn: float


def _check_m(m: float) -> None:
    if not 0.0 <= m < 1.0:
        raise ValueError(f"parameter m must satisfy 0 <= m < 1, got {m!r}")


def _agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    for _ in range(60):
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        if abs(a - b) <= 1e-15 * a:
            break
    return 0.5 * (a + b)


def _K_from_complement(mc: float) -> float:
    """K as a function of the complementary parameter m' = 1 - m.

    Taking m' directly avoids the 1 - m rounding loss when m is close to 1;
    the boundary-constant solvers rely on this entry point.
    """
    if mc <= 0.0:
        raise ValueError(f"complementary parameter must be positive, got {mc!r}")
    return math.pi / (2.0 * _agm(1.0, math.sqrt(mc)))


def ellint_K(m: float) -> float:
    """Complete elliptic integral of the first kind, K(m) = F(pi/2|m).

    Strictly increasing in m, K(0) = pi/2, divergent as m -> 1.
    """
    _check_m(m)
    return _K_from_complement(1.0 - m)


def ellint_Kprime(m: float) -> float:
    """Complementary quarter period K'(m) = K(1 - m) for 0 < m <= 1."""
    if not 0.0 < m <= 1.0:
        raise ValueError(f"ellint_Kprime requires 0 < m <= 1, got {m!r}")
    return _K_from_complement(m)


# --------------------------------------------------------------------------
# Carlson symmetric integrals (full duplication, relative error ~1e-16)
# --------------------------------------------------------------------------

_CARLSON_R = 1e-16


def _rf(x: float, y: float, z: float) -> float:
    """Carlson R_F(x, y, z) for nonnegative arguments, at most one zero."""
    x0, y0 = x, y
    A = A0 = (x + y + z) / 3.0
    Q = (3.0 * _CARLSON_R) ** (-1.0 / 6.0) * max(
        abs(A0 - x), abs(A0 - y), abs(A0 - z)
    )
    f = 1.0
    while f * Q > abs(A):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * (sy + sz) + sy * sz
        A = 0.25 * (A + lam)
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        f *= 0.25
    X = (A0 - x0) * f / A
    Y = (A0 - y0) * f / A
    Z = -X - Y
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    return (
        1.0 - E2 / 10.0 + E3 / 14.0 + E2 * E2 / 24.0 - 3.0 * E2 * E3 / 44.0
    ) / math.sqrt(A)


def _rc(x: float, y: float) -> float:
    """Carlson R_C(x, y) = R_F(x, y, y) for x >= 0, y > 0."""
    y0 = y
    A = A0 = (x + 2.0 * y) / 3.0
    Q = (3.0 * _CARLSON_R) ** (-0.125) * abs(A0 - x)
    f = 1.0
    while f * Q > abs(A):
        lam = 2.0 * math.sqrt(x) * math.sqrt(y) + y
        A = 0.25 * (A + lam)
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        f *= 0.25
    s = (y0 - A0) * f / A
    poly = 1.0 + s * s * (
        0.3 + s * (1.0 / 7.0 + s * (0.375 + s * (9.0 / 22.0 + s * (159.0 / 208.0 + s * 1.125))))
    )
    return poly / math.sqrt(A)


def _rj(x: float, y: float, z: float, p: float) -> float:
    """Carlson R_J(x, y, z, p) for nonnegative x, y, z (one may be zero), p > 0."""
    x0, y0, z0 = x, y, z
    A = A0 = (x + y + z + 2.0 * p) / 5.0
    delta = (p - x) * (p - y) * (p - z)
    Q = (0.25 * _CARLSON_R) ** (-1.0 / 6.0) * max(
        abs(A0 - x), abs(A0 - y), abs(A0 - z), abs(A0 - p)
    )
    f = 1.0
    rc_sum = 0.0
    while f * Q > abs(A):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        sp = math.sqrt(p)
        lam = sx * (sy + sz) + sy * sz
        d = (sp + sx) * (sp + sy) * (sp + sz)
        e = (f ** 3) * delta / (d * d)
        rc_sum += f / d * _rc(1.0, 1.0 + e)
        A = 0.25 * (A + lam)
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        p = 0.25 * (p + lam)
        f *= 0.25
    X = (A0 - x0) * f / A
    Y = (A0 - y0) * f / A
    Z = (A0 - z0) * f / A
    P = (-X - Y - Z) / 2.0
    E2 = X * Y + X * Z + Y * Z - 3.0 * P * P
    E3 = X * Y * Z + 2.0 * E2 * P + 4.0 * P ** 3
    E4 = (2.0 * X * Y * Z + E2 * P + 3.0 * P ** 3) * P
    E5 = X * Y * Z * P * P
    series = (
        1.0
        - 3.0 * E2 / 14.0
        + E3 / 6.0
        + 9.0 * E2 * E2 / 88.0
        - 3.0 * E4 / 22.0
        - 9.0 * E2 * E3 / 52.0
        + 3.0 * E5 / 26.0
    )
    return f * series / (A * math.sqrt(A)) + 6.0 * rc_sum


# --------------------------------------------------------------------------
# Incomplete integrals
# --------------------------------------------------------------------------


def ellint_F(theta: float, m: float) -> float:
    """Incomplete elliptic integral of the first kind F(theta|m).

    Defined for theta in [0, pi]; values past pi/2 use the reflection
    F(theta) = 2K - F(pi - theta).
    """
    _check_m(m)
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"amplitude theta must lie in [0, pi], got {theta!r}")
    if theta > 0.5 * math.pi:
        return 2.0 * ellint_K(m) - ellint_F(math.pi - theta, m)
    if theta == 0.0:
        return 0.0
    s = math.sin(theta)
    return s * _rf(math.cos(theta) ** 2, 1.0 - m * s * s, 1.0)


def ellint_Pi_amp(n: float, theta: float, m: float) -> float:
    """Incomplete third-kind integral in amplitude form, Pi(n; theta|m).

    theta must lie in [0, pi/2]; the characteristic must satisfy n < 1
    (for n >= 1 the integrand crosses its singularity before theta = pi/2).
    """
    _check_m(m)
    if n >= 1.0:
        raise ValueError(f"characteristic must satisfy n < 1, got {n!r}")
    if not 0.0 <= theta <= 0.5 * math.pi:
        raise ValueError(f"amplitude theta must lie in [0, pi/2], got {theta!r}")
    if theta == 0.0:
        return 0.0
    s = math.sin(theta)
    c2 = math.cos(theta) ** 2
    q = 1.0 - m * s * s
    value = s * _rf(c2, q, 1.0)
    if n != 0.0:
        value += (n / 3.0) * s ** 3 * _rj(c2, q, 1.0, 1.0 - n * s * s)
    return value


def ellint_Pi_arg(n: float, u: float, m: float) -> float:
    """Incomplete third-kind integral in Jacobi-argument form.

    Pi(n; u|m) = integral_0^u dt / (1 - n sn^2(t|m)) for u in [0, 2K].
    On (K, 2K] the symmetry sn(2K - t) = sn(t) gives
    Pi(n; u) = 2 Pi(n; K) - Pi(n; 2K - u).
    """
    _check_m(m)
    if n >= 1.0:
        raise ValueError(f"characteristic must satisfy n < 1, got {n!r}")
    K = ellint_K(m)
    two_K = 2.0 * K
    if not -_EDGE_SLACK * two_K <= u <= (1.0 + _EDGE_SLACK) * two_K:
        raise ValueError(f"argument u must lie in [0, 2K] = [0, {two_K!r}], got {u!r}")
    u = min(max(u, 0.0), two_K)
    if u > K:
        return 2.0 * ellint_Pi_arg(n, K, m) - ellint_Pi_arg(n, two_K - u, m)
    # the descent can overshoot pi/2 by an ulp at u = K
    theta = min(_am_descend(u, m), 0.5 * math.pi)
    return ellint_Pi_amp(n, theta, m)


def arcsn(x: float, m: float) -> float:
    """Inverse of sn on [0, 1]:

    arcsn(x|m) = integral_0^x dt / sqrt((1 - t^2)(1 - m t^2)),

    so that sn(arcsn(x|m)|m) = x and arcsn(1|m) = K(m).
    """
    _check_m(m)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"arcsn argument must lie in [0, 1], got {x!r}")
    if x == 0.0:
        return 0.0
    return x * _rf(1.0 - x * x, 1.0 - m * x * x, 1.0)


# --------------------------------------------------------------------------
# Jacobi functions
# --------------------------------------------------------------------------


def _sncndn_descend(u: float, mc: float) -> tuple[float, float, float]:
    """Jacobi triple on the reduced interval [0, K] via descending Landen
    transformation on function values; mc = 1 - m > 0."""
    if mc == 1.0:  # m = 0: circular limit
        return math.sin(u), math.cos(u), 1.0
    a = 1.0
    dn = 1.0
    means = []
    roots = []
    emc = mc
    for _ in range(16):
        means.append(a)
        emc = math.sqrt(emc)
        roots.append(emc)
        c = 0.5 * (a + emc)
        if abs(a - emc) <= _LANDEN_TOL * a:
            break
        emc *= a
        a = c
    u = u * c
    sn = math.sin(u)
    cn = math.cos(u)
    if sn != 0.0:
        ratio = cn / sn
        c *= ratio
        for b, e in zip(reversed(means), reversed(roots)):
            ratio *= c
            c *= dn
            dn = (e + ratio) / (b + ratio)
            ratio = c / b
        inv = 1.0 / math.sqrt(c * c + 1.0)
        sn = inv if sn >= 0.0 else -inv
        cn = c * sn
    return sn, cn, dn


def jacobi_sn_cn_dn(u: float, m: float) -> JacobiTriple:
    """Jacobi elliptic functions sn, cn, dn at argument u and parameter m.

    Valid for any real u; the argument is reduced modulo the period lattice
    (4K for sn and cn, 2K for dn) before the Landen descent, with quadrant
    signs restored afterwards.
    """
    _check_m(m)
    K = ellint_K(m)
    v = math.fmod(u, 4.0 * K)
    if v < 0.0:
        v += 4.0 * K
    sign_sn = 1.0
    sign_cn = 1.0
    if v >= 2.0 * K:
        v -= 2.0 * K
        sign_sn = -1.0
        sign_cn = -1.0
    if v > K:
        v = 2.0 * K - v
        sign_cn = -sign_cn
    sn, cn, dn = _sncndn_descend(v, 1.0 - m)
    return JacobiTriple(sign_sn * sn, sign_cn * cn, dn)


def jacobi_ratio(num: str, den: str, u: float, m: float) -> float:
    """Glued-letter ratio function pq(u|m) = p(u)/q(u) for p, q in {s, c, d, n}.

    The letter n denotes the constant 1, and pp = 1 exactly.

    Raises:
        PoleError: when the denominator function vanishes at u (for example
            cs at u = 0); such points mark the boundary of the strip-map
            domain and callers there substitute exact limits.
    """
    if num not in _RATIO_LETTERS or den not in _RATIO_LETTERS:
        raise ValueError(
            f"ratio letters must come from 's', 'c', 'd', 'n'; got {num!r}, {den!r}"
        )
    if num == den:
        return 1.0
    triple = jacobi_sn_cn_dn(u, m)
    values = {"s": triple.sn, "c": triple.cn, "d": triple.dn, "n": 1.0}
    denominator = values[den]
    if denominator == 0.0:
        raise PoleError(
            f"{num}{den}(u|m) has a pole at u = {u!r}: the {den}-function vanishes"
        )
    return values[num] / denominator


def _am_descend(u: float, m: float) -> float:
    """Amplitude on the reduced interval [0, K] via the AGM descent.

    Runs the arithmetic-geometric mean to convergence, seeds the angle
    phi_N = 2^N a_N u, and halves back down with
    phi_{n-1} = (phi_n + asin((c_n/a_n) sin phi_n)) / 2, for which the
    principal branch of asin is correct on [0, K].
    """
    if m == 0.0:
        return u
    a, b = 1.0, math.sqrt(1.0 - m)
    ratios = []
    for _ in range(60):
        an = 0.5 * (a + b)
        bn = math.sqrt(a * b)
        cn = 0.5 * (a - b)
        ratios.append(cn / an)
        a, b = an, bn
        if cn <= 1e-15 * an:
            break
    phi = (2.0 ** len(ratios)) * a * u
    for ratio in reversed(ratios):
        s = ratio * math.sin(phi)
        phi = 0.5 * (phi + math.asin(min(1.0, max(-1.0, s))))
    return phi


def jacobi_am(u: float, m: float) -> float:
    """Amplitude am(u|m): the angle theta in [0, pi] with F(theta|m) = u.

    Defined for u in [0, 2K]; on (K, 2K] the reflection
    am(u) = pi - am(2K - u) applies.  Nondecreasing in u, with am(K) = pi/2
    and am(2K) = pi.
    """
    _check_m(m)
    K = ellint_K(m)
    two_K = 2.0 * K
    if not -_EDGE_SLACK * two_K <= u <= (1.0 + _EDGE_SLACK) * two_K:
        raise ValueError(f"amplitude argument must lie in [0, 2K] = [0, {two_K!r}], got {u!r}")
    u = min(max(u, 0.0), two_K)
    if u > K:
        return math.pi - _am_descend(two_K - u, m)
    return _am_descend(u, m)
