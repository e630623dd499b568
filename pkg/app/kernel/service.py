"""
Explicit-formula kernels N, R, P and the optimized bound M(n, r, u)
"""

import itertools
import math
from collections.abc import Callable
from fractions import Fraction
from functools import lru_cache

from loguru import logger
from sympy import EulerGamma

from app.config import get_settings
from app.kernel.model import KernelValue, MResult
from app.kernel.quadrature import golden_section_max, integrate_adaptive_simpson
from app.utils.counter import kernel_counter, optimize_counter

EULER_GAMMA = float(EulerGamma.evalf(30))
LOG_8PI = math.log(8 * math.pi)
N_INFINITY = EULER_GAMMA + LOG_8PI
R_INFINITY = math.pi / 2
LOG_FLOAT_MAX = math.log(1.7976931348623157e308)

Real = float | int | Fraction


def test_f(x: float) -> float:
    """Test function (1-x) cos(pi x) + sin(pi x)/pi on [0, 1], zero beyond"""
    if x < 0:
        raise ValueError(f"test function is defined for x >= 0, got {x}")
    if x > 1:
        return 0.0
    return (1 - x) * math.cos(math.pi * x) + math.sin(math.pi * x) / math.pi


def _half_csch(x: float) -> float:
    """1/(2 sinh(x/2)) without overflow"""
    return math.exp(-x / 2) / -math.expm1(-x)


def _half_sech(x: float) -> float:
    """1/(2 cosh(x/2)) without overflow"""
    return math.exp(-x / 2) / (1 + math.exp(-x))


def _breakpoints(z: float) -> list[float]:
    # panels [0, 1], [1, 2], [2, 4], ... closed off at z
    points = [0.0]
    edge = 1.0
    while edge < z:
        points.append(edge)
        edge *= 2
    points.append(z)
    return points


def _integrate(integrand: Callable[[float], float], z: float, tol: float, max_depth: int) -> float:
    points = _breakpoints(z)
    share = tol / (len(points) - 1)
    return sum(integrate_adaptive_simpson(integrand, a, b, share, max_depth) for a, b in itertools.pairwise(points))


def log_p(z: float) -> float:
    """log P(z) from the closed form 256 pi^2 z cosh^2(z/4) / (z^2 + 4 pi^2)^2"""
    y = z / 4
    log_cosh = y + math.log1p(math.exp(-2 * y)) - math.log(2)
    return math.log(256 * math.pi**2 * z) + 2 * log_cosh - 2 * math.log(z * z + 4 * math.pi**2)


def p_closed_form(z: float) -> float:
    """P(z); +inf when it leaves the float range"""
    value = log_p(z)
    return math.inf if value > LOG_FLOAT_MAX else math.exp(value)


def p_by_quadrature(z: float, rel_tol: float = 1e-12, max_depth: int = 60) -> float:
    """
    P(z) from its integral definition 4 * int_0^z f(x/z) cosh(x/2) dx

    Used to cross-check the closed form.
    """
    if z <= 0:
        raise ValueError(f"z must be positive, got {z}")
    tol = rel_tol * 4 * z * math.cosh(z / 2)
    return 4 * integrate_adaptive_simpson(lambda x: test_f(x / z) * math.cosh(x / 2), 0.0, z, tol, max_depth)


@lru_cache(maxsize=65536)
def _kernel_values(z: float, tol: float, max_depth: int) -> tuple[float, float, float]:
    kernel_counter.add(1, {"cache": "miss"})

    def n_integrand(x: float) -> float:
        if x == 0:
            return 0.0
        return (test_f(x / z) - 1) * _half_csch(x)

    def r_integrand(x: float) -> float:
        return test_f(x / z) * _half_sech(x)

    q = math.exp(-z / 2)
    # log((e^{z/2}+1)/(e^{z/2}-1)) = log1p(q) - log1p(-q)
    log_coth = math.log1p(q) - math.log1p(-q)
    n_value = N_INFINITY + _integrate(n_integrand, z, tol, max_depth) - log_coth
    r_value = _integrate(r_integrand, z, tol, max_depth)
    return n_value, r_value, p_closed_form(z)


def kernels(z: float, tol: float | None = None) -> KernelValue:
    """
    Evaluate N(z), R(z) and P(z)

    N and R use adaptive Simpson on [0, z] with absolute error at most `tol` each; the
    N-integrand is extended by its limit 0 at x = 0. P uses the closed form.

    Args:
        z: Positive real
        tol: Absolute quadrature tolerance, QUAD_TOL by default

    Returns:
        KernelValue

    Raises:
        ValueError: If z or tol is not positive
        QuadratureError: If quadrature does not converge within QUAD_MAX_DEPTH
    """
    settings = get_settings()
    tol = settings.QUAD_TOL if tol is None else tol
    if z <= 0 or tol <= 0:
        raise ValueError(f"kernels need z > 0 and tol > 0, got z={z}, tol={tol}")
    n_value, r_value, p_value = _kernel_values(float(z), float(tol), settings.QUAD_MAX_DEPTH)
    return KernelValue(z=z, N=n_value, R=r_value, P=p_value)


def _objective(z: float, r_ratio: float, u_ratio: float, tol: float) -> float:
    k = kernels(z, tol)
    if math.isinf(k.P):
        return -math.inf
    return k.N + r_ratio * k.R - u_ratio * k.P


def big_m(n: Real, r: Real, u: Real, tol: float | None = None, *, z_cap: float | None = None, profile: bool = False) -> MResult:
    """
    M(n, r, u) = max_z exp(N(z) + (r/n) R(z) - (u/n) P(z))

    The maximum is located by a geometric scan z = SCAN_START * SCAN_RATIO^j that stops once
    the running maximum has not improved for SCAN_PATIENCE steps or z exceeds the cap, then
    refined by golden-section search on the bracketing triple down to GOLDEN_WIDTH.

    Args:
        n: Degree, positive
        r: Signature, -n <= r <= n
        u: Multiplicity of the unital character, positive
        tol: Quadrature tolerance, QUAD_TOL by default
        z_cap: Scan cap, SCAN_Z_CAP by default
        profile: Also return the sampled (z, objective) scan

    Returns:
        MResult; `cap_reached` is set when the scan hit the cap while still improving

    Raises:
        ValueError: If the arguments are out of range
    """
    settings = get_settings()
    tol = settings.QUAD_TOL if tol is None else tol
    z_cap = settings.SCAN_Z_CAP if z_cap is None else z_cap
    n_q, r_q, u_q = Fraction(n), Fraction(r), Fraction(u)
    if n_q <= 0 or u_q <= 0 or not -n_q <= r_q <= n_q:
        raise ValueError(f"M(n, r, u) needs n > 0, u > 0 and -n <= r <= n, got ({n}, {r}, {u})")

    log_value, argmax_z, cap_reached, samples = _optimize(r_q / n_q, u_q / n_q, float(tol), float(z_cap))
    optimize_counter.add(1, {"status": "cap_reached" if cap_reached else "ok"})
    if cap_reached:
        logger.warning(f"M({float(n)}, {float(r)}, {float(u)}): scan reached z cap {z_cap} while the objective was still increasing")
    return MResult(
        n=float(n_q),
        r=float(r_q),
        u=float(u_q),
        value=math.exp(log_value),
        log_value=log_value,
        argmax_z=argmax_z,
        cap_reached=cap_reached,
        profile=list(samples) if profile else None,
    )


@lru_cache(maxsize=8192)
def _optimize(r_ratio: Fraction, u_ratio: Fraction, tol: float, z_cap: float) -> tuple[float, float, bool, tuple[tuple[float, float], ...]]:
    settings = get_settings()
    a, b = float(r_ratio), float(u_ratio)

    samples: list[tuple[float, float]] = []
    best_j, best_value = 0, -math.inf
    cap_reached = False
    j = 0
    while True:
        z = settings.SCAN_START * settings.SCAN_RATIO**j
        if z > z_cap:
            cap_reached = best_j == j - 1
            break
        value = _objective(z, a, b, tol)
        samples.append((z, value))
        if value > best_value:
            best_j, best_value = j, value
        elif j - best_j >= settings.SCAN_PATIENCE:
            break
        j += 1

    lo = settings.SCAN_START * settings.SCAN_RATIO ** (best_j - 1)
    hi = settings.SCAN_START * settings.SCAN_RATIO ** (best_j + 1)
    lo, hi = golden_section_max(lambda z: _objective(z, a, b, tol), lo, hi, settings.GOLDEN_WIDTH)
    argmax_z = (lo + hi) / 2
    refined = _objective(argmax_z, a, b, tol)
    if refined < best_value:
        argmax_z, refined = settings.SCAN_START * settings.SCAN_RATIO**best_j, best_value
    logger.debug(f"M scan r/n={a:.6g} u/n={b:.6g}: {len(samples)} samples, argmax z={argmax_z:.6f}, log M={refined:.9f}")
    return refined, argmax_z, cap_reached, tuple(samples)


def omega() -> float:
    """Omega = exp(gamma + log 8 pi), the limit of M(n, 0, 1)"""
    return math.exp(N_INFINITY)


def theta() -> float:
    """Theta = exp(gamma + log 8 pi + pi/2), the limit of M(n, n, 1)"""
    return math.exp(N_INFINITY + R_INFINITY)


def asymptotic_floor(eps: Real) -> float:
    """
    Omega^(1-eps) * Theta^eps, the asymptotic floor when a fraction eps of the places is real

    Raises:
        ValueError: If eps is outside [0, 1]
    """
    if not 0 <= eps <= 1:
        raise ValueError(f"eps must lie in [0, 1], got {eps}")
    eps = float(eps)
    return math.exp((1 - eps) * N_INFINITY + eps * (N_INFINITY + R_INFINITY))
