"""Adaptive Simpson quadrature and golden-section maximization."""

import math
from collections.abc import Callable

from app.exceptions import QuadratureError

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h / 3.0 * (fa + 4.0 * fm + fb)


def integrate_adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    max_depth: int = 50,
) -> float:
    """
    Adaptive Simpson's rule on [a, b]

    Each half receives half the tolerance of its parent and the accepted pair is
    Richardson-corrected.

    Args:
        f: Integrand, finite on [a, b]
        a: Lower bound
        b: Upper bound
        tol: Absolute error tolerance for the whole integral
        max_depth: Maximum recursion depth

    Returns:
        Integral value

    Raises:
        QuadratureError: If some subinterval has not converged at max_depth
    """
    if a == b:
        return 0.0
    if a > b:
        return -integrate_adaptive_simpson(f, b, a, tol, max_depth)

    def _adaptive(a: float, b: float, fa: float, fm: float, fb: float, s_whole: float, depth: int, tol: float) -> float:
        m = (a + b) / 2.0
        h = (b - a) / 2.0
        lm = (a + m) / 2.0
        rm = (m + b) / 2.0
        flm = f(lm)
        frm = f(rm)
        s_left = _simpson(fa, flm, fm, h / 2.0)
        s_right = _simpson(fm, frm, fb, h / 2.0)
        error_estimate = (s_left + s_right - s_whole) / 15.0

        if abs(error_estimate) <= tol:
            return s_left + s_right + error_estimate
        if depth >= max_depth:
            raise QuadratureError(f"Adaptive Simpson did not converge on [{a}, {b}] at depth {depth} (error {abs(error_estimate):.3e} > {tol:.3e})")

        return _adaptive(a, m, fa, flm, fm, s_left, depth + 1, tol / 2.0) + _adaptive(m, b, fm, frm, fb, s_right, depth + 1, tol / 2.0)

    fa = f(a)
    fb = f(b)
    fm = f((a + b) / 2.0)
    s_whole = _simpson(fa, fm, fb, (b - a) / 2.0)
    return _adaptive(a, b, fa, fm, fb, s_whole, 0, tol)


def golden_section_max(f: Callable[[float], float], a: float, b: float, width: float) -> tuple[float, float]:
    """
    Golden-section search for the maximum of a unimodal function

    Returns:
        The final bracket (lo, hi) with hi - lo <= width
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= width:
        return a, b

    # Required steps to achieve width
    n = int(math.ceil(math.log(width / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc > yd:
        return a, d
    return c, b
