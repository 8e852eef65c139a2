"""Deterministic numerical primitives: quadrature, bisection, RK4.

These are deliberately kept apart from the elliptic-function evaluators so
that verification oracles built on them (quadrature inversion, ODE shooting)
share no code path with the closed forms they are checking.  Everything here
is fixed-order and fully deterministic: identical inputs give byte-identical
results on every run.
"""

from __future__ import annotations

import heapq
import math
from typing import Callable, Sequence

from .errors import ConvergenceError

# 15-point Kronrod nodes on [-1, 1] with the embedded 7-point Gauss rule.
# (node, Gauss weight, Kronrod weight); Gauss weight 0 marks Kronrod-only nodes.
_GK15 = (
    (+0.991455371120812639206854697526329, 0.0, 0.022935322010529224963732008058970),
    (-0.991455371120812639206854697526329, 0.0, 0.022935322010529224963732008058970),
    (+0.949107912342758524526189684047851, 0.129484966168869693270611432679082, 0.063092092629978553290700663189204),
    (-0.949107912342758524526189684047851, 0.129484966168869693270611432679082, 0.063092092629978553290700663189204),
    (+0.864864423359769072789712788640926, 0.0, 0.104790010322250183839876322541518),
    (-0.864864423359769072789712788640926, 0.0, 0.104790010322250183839876322541518),
    (+0.741531185599394439863864773280788, 0.279705391489276667901467771423780, 0.140653259715525918745189590510238),
    (-0.741531185599394439863864773280788, 0.279705391489276667901467771423780, 0.140653259715525918745189590510238),
    (+0.586087235467691130294144838258730, 0.0, 0.169004726639267902826583426598550),
    (-0.586087235467691130294144838258730, 0.0, 0.169004726639267902826583426598550),
    (+0.405845151377397166906606412076961, 0.381830050505118944950369775488975, 0.190350578064785409913256402421014),
    (-0.405845151377397166906606412076961, 0.381830050505118944950369775488975, 0.190350578064785409913256402421014),
    (+0.207784955007898467600689403773245, 0.0, 0.204432940075298892414161999234649),
    (-0.207784955007898467600689403773245, 0.0, 0.204432940075298892414161999234649),
    (0.0, 0.417959183673469387755102040816327, 0.209482141084727828012999174891714),
)


def gauss_kronrod(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """One G7/K15 panel on [a, b]; returns (integral, error estimate)."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    g7 = 0.0
    k15 = 0.0
    for node, wg, wk in _GK15:
        fx = f(mid + half * node)
        g7 += wg * fx
        k15 += wk * fx
    err = (200.0 * abs(k15 - g7)) ** 1.5 * abs(half)
    return k15 * half, err


def adaptive_quad(
    f: Callable[[float], float],
    a: float,
    b: float,
    *,
    tol: float = 1e-11,
    max_panels: int = 2048,
) -> float:
    """Adaptive Gauss-Kronrod integration of f on the finite interval [a, b].

    The panel with the largest error estimate is bisected until the summed
    estimate drops below the absolute tolerance ``tol``.

    Raises:
        ConvergenceError: if ``max_panels`` subdivisions do not reach ``tol``.
    """
    if a == b:
        return 0.0
    val, err = gauss_kronrod(f, a, b)
    # heap entries: (-err, insertion counter, a, b, value, err)
    heap = [(-err, 0, a, b, val, err)]
    total_val = val
    total_err = err
    count = 1
    while total_err > tol:
        if count >= max_panels:
            raise ConvergenceError(
                f"adaptive quadrature did not reach tol={tol:g} within "
                f"{max_panels} panels (error estimate {total_err:g})"
            )
        _, _, pa, pb, pval, perr = heapq.heappop(heap)
        pm = 0.5 * (pa + pb)
        lv, le = gauss_kronrod(f, pa, pm)
        rv, re = gauss_kronrod(f, pm, pb)
        total_val += lv + rv - pval
        total_err += le + re - perr
        heapq.heappush(heap, (-le, count, pa, pm, lv, le))
        heapq.heappush(heap, (-re, count + 1, pm, pb, rv, re))
        count += 2
    return total_val


def bisect_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    xtol: float = 1e-13,
    max_iter: int = 200,
) -> tuple[float, int]:
    """Bisection on a bracketing interval [lo, hi] with f(lo)*f(hi) <= 0.

    Returns (root, iterations).  Stops when the bracket is narrower than
    ``xtol`` or cannot be split further in double precision.

    Raises:
        ConvergenceError: if the bracket does not change sign.
    """
    flo = f(lo)
    if flo == 0.0:
        return lo, 0
    fhi = f(hi)
    if fhi == 0.0:
        return hi, 0
    if (flo > 0.0) == (fhi > 0.0):
        raise ConvergenceError(
            f"root is not bracketed on [{lo:g}, {hi:g}]: "
            f"f(lo)={flo:g}, f(hi)={fhi:g}"
        )
    iterations = 0
    while iterations < max_iter:
        mid = 0.5 * (lo + hi)
        if mid <= min(lo, hi) or mid >= max(lo, hi):
            break  # interval no longer splittable
        fm = f(mid)
        iterations += 1
        if fm == 0.0:
            return mid, iterations
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
        if abs(hi - lo) <= xtol:
            break
    return 0.5 * (lo + hi), iterations


def rk4_segment(
    rhs: Callable[[float, Sequence[float]], Sequence[float]],
    t0: float,
    state: Sequence[float],
    t1: float,
    max_step: float,
) -> tuple[float, ...]:
    """Integrate state' = rhs(t, state) from t0 to t1 with classical RK4.

    Uses a fixed step of at most ``max_step`` (the segment is divided into
    equal substeps), so the result is reproducible across platforms.
    """
    y = tuple(state)
    span = t1 - t0
    if span == 0.0:
        return y
    n = max(1, math.ceil(abs(span) / max_step))
    h = span / n
    t = t0
    for _ in range(n):
        k1 = rhs(t, y)
        k2 = rhs(t + 0.5 * h, tuple(yi + 0.5 * h * ki for yi, ki in zip(y, k1)))
        k3 = rhs(t + 0.5 * h, tuple(yi + 0.5 * h * ki for yi, ki in zip(y, k2)))
        k4 = rhs(t + h, tuple(yi + h * ki for yi, ki in zip(y, k3)))
        y = tuple(
            yi + (h / 6.0) * (a + 2.0 * b + 2.0 * c + d)
            for yi, a, b, c, d in zip(y, k1, k2, k3, k4)
        )
        t += h
    return y
