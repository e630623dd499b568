"""Tests for the explicit-formula kernels and M(n, r, u)"""

import math

import pytest

from app.kernel import service as kernel


def test_test_function_values():
    assert kernel.test_f(0.0) == pytest.approx(1.0)
    assert kernel.test_f(0.5) == pytest.approx(1 / math.pi)
    assert kernel.test_f(1.0) == pytest.approx(0.0, abs=1e-15)
    assert kernel.test_f(3.0) == 0.0
    with pytest.raises(ValueError):
        kernel.test_f(-0.1)


def test_constants():
    assert kernel.omega() == pytest.approx(44.7632, abs=1e-4)
    assert kernel.theta() == pytest.approx(215.3325, abs=1e-4)
    assert kernel.EULER_GAMMA == pytest.approx(0.5772156649015329)


@pytest.mark.parametrize(
    "z,expected",
    [
        (1.0, 1.640430908799),
        (5.0, 10.836273046921),
        (20.0, 1440.850305134707),
        (2 * math.pi, 8 * math.cosh(math.pi / 2) ** 2 / math.pi),
    ],
)
def test_p_closed_form(z: float, expected: float):
    assert kernel.p_closed_form(z) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("z", [1.0, 5.0, 20.0])
def test_p_closed_form_matches_quadrature(z: float):
    """The closed form of P agrees with its integral definition"""
    assert kernel.p_by_quadrature(z) == pytest.approx(kernel.p_closed_form(z), rel=1e-8)


def test_p_overflows_to_infinity():
    assert kernel.p_closed_form(4000.0) == math.inf
    assert math.isfinite(kernel.log_p(4000.0))


def test_kernel_limits():
    """N and R approach gamma + log 8 pi and pi/2 for large z"""
    value = kernel.kernels(1000.0)

    assert value.N == pytest.approx(kernel.N_INFINITY, abs=1e-3)
    assert value.R == pytest.approx(math.pi / 2, abs=1e-3)
    assert value.N == pytest.approx(3.801304, abs=1e-5)
    assert value.R == pytest.approx(1.570720, abs=1e-5)


def test_kernels_reject_bad_arguments():
    with pytest.raises(ValueError):
        kernel.kernels(0.0)
    with pytest.raises(ValueError):
        kernel.kernels(1.0, tol=0.0)


@pytest.mark.parametrize(
    "n,r,u,expected",
    [
        (2, 0, 1, 1.722443),
        (3, 3, 1, 6.926108 ** (2 / 3)),
        (4, 0, 1, 3.266494),
        (6, 0, 1, 4.595330),
        (8, 0, 1, 5.737839),
        (120, 0, 1, 20.229461),
    ],
)
def test_big_m(n: int, r: int, u: int, expected: float):
    assert kernel.big_m(n, r, u).value == pytest.approx(expected, abs=1e-5)


def test_big_m_scale_identity():
    assert kernel.big_m(10, 4, 2).value == pytest.approx(kernel.big_m(5, 2, 1).value, rel=1e-6)
    assert kernel.big_m(5, 2, 1).value == pytest.approx(4.80086631, abs=1e-6)
    assert kernel.big_m(16, 0, 4).value == pytest.approx(kernel.big_m(4, 0, 1).value, rel=1e-12)


@pytest.mark.parametrize("n", [2, 10, 100, 10**4])
def test_big_m_in_signature(n: int):
    """M grows with the signature r"""
    values = tuple(kernel.big_m(n, r, 1).value for r in (0, n // 2, n))

    assert values[0] < values[1] < values[2]


def test_big_m_sandwich():
    """M(n, 0, 1) increases towards Omega and M(n, n, 1) towards Theta"""
    general = [kernel.big_m(n, 0, 1) for n in (10**2, 10**4, 10**6)]
    real = kernel.big_m(10**6, 10**6, 1)

    assert general[0].value < general[1].value < general[2].value < kernel.omega()
    assert [m.value for m in general] == pytest.approx([19.27862, 34.77710, 39.93856], abs=1e-4)
    assert real.value < kernel.theta()
    assert not any(m.cap_reached for m in (*general, real))


def test_big_m_profile():
    result = kernel.big_m(2, 0, 1, profile=True)

    assert result.profile is not None
    assert result.profile[0][0] == pytest.approx(0.05)
    assert max(value for _, value in result.profile) <= result.log_value + 1e-12
    assert kernel.big_m(2, 0, 1).profile is None


def test_big_m_cap_reached():
    result = kernel.big_m(10**6, 0, 1, z_cap=5.0)

    assert result.cap_reached
    assert result.argmax_z <= 5.0 * 1.1


@pytest.mark.parametrize(
    "n,r,u",
    [
        (0, 0, 1),
        (2, 3, 1),
        (2, 0, 0),
        (-1, 0, 1),
    ],
)
def test_big_m_rejects_bad_arguments(n: int, r: int, u: int):
    with pytest.raises(ValueError):
        kernel.big_m(n, r, u)


def test_asymptotic_floor():
    assert kernel.asymptotic_floor(0) == pytest.approx(kernel.omega())
    assert kernel.asymptotic_floor(1) == pytest.approx(kernel.theta())
    assert math.sqrt(kernel.asymptotic_floor(0)) == pytest.approx(6.6905, abs=1e-4)
    with pytest.raises(ValueError):
        kernel.asymptotic_floor(1.5)
