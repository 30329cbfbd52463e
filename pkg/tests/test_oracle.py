import math

import pytest

from quatcalc import analytic as af
from quatcalc import oracle
from quatcalc.differential import dcal
from quatcalc.errors import DegenerateResidual
from quatcalc.quaternion import I, J, ZERO, Quaternion, split


def close(a, b, tol=1e-12):
    return (Quaternion.coerce(a) - Quaternion.coerce(b)).norm() <= tol


def test_direct_power_examples():
    x = Quaternion(0.3, 1.2, -0.4, 2)
    assert oracle.direct_power_first_order(1, x, J) == J
    assert close(oracle.direct_power_first_order(2, Quaternion(1, 1), J), 2 * J)
    with pytest.raises(ValueError):
        oracle.direct_power_first_order(0, x, J)
    assert close(oracle.direct_power_second_order(2, x, J), J * J)


def test_quadrature_examples():
    d = Quaternion(0.2, -1, 0.5, 3)
    assert close(oracle.exp_expansion_quadrature(ZERO, d), d, 1e-15)
    x = Quaternion(0.5, 0.3, 0.4, 0)
    par = split(x, d).parallel
    assert close(oracle.exp_expansion_quadrature(x, par), af.evaluate(af.exp(), x) * par, 1e-13)
    assert close(oracle.exp_expansion_quadrature(I * (math.pi / 2), J), J * (2 / math.pi), 1e-12)
    with pytest.raises(ValueError):
        oracle.exp_expansion_quadrature(x, d, nodes=4)


def test_quadrature_converges_with_nodes():
    x, d = Quaternion(1, -1.5, 1, 1), Quaternion(0.3, 0.1, 0.9, -0.2)
    ref = dcal(af.exp(), x, d)
    errs = [(oracle.exp_expansion_quadrature(x, d, n) - ref).norm() for n in (8, 16)]
    assert errs[1] < errs[0]


def test_residual_slope_examples():
    rep = oracle.residual_slope(af.power(2), Quaternion(1, 1), J, 1)
    assert all(abs(r - e * e) <= 1e-15 for e, r in zip(rep.epsilons, rep.residuals))
    assert abs(rep.slope - 2) <= 1e-3 and rep.usable
    with pytest.raises(DegenerateResidual):
        oracle.residual_slope(af.power(2), Quaternion(1, 1), J, 2)
    rep = oracle.residual_slope(af.exp(), Quaternion(1, 1, 0, 1), J, 1)
    assert 1.8 <= rep.slope <= 2.2


def test_slope_report_validation():
    with pytest.raises(ValueError):
        oracle.SlopeReport((1e-2, 1e-3), (1.0, 2.0), 1.0, 1.0)
    with pytest.raises(ValueError):
        oracle.SlopeReport((1e-3, 1e-2, 1e-4), (1.0, 2.0, 3.0), 1.0, 1.0)
    rep = oracle.fit_slope((1e-1, 1e-2, 1e-3), (1.0, 0.5, 2.0))
    assert not rep.usable


def test_fit_slope_recovers_power_law():
    eps = (1e-1, 1e-2, 1e-3, 1e-4)
    rep = oracle.fit_slope(eps, [3 * e ** 2.5 for e in eps])
    assert abs(rep.slope - 2.5) < 1e-12 and rep.r2 > 0.999999


def test_power_series_and_taylor_tables():
    x = Quaternion(0.1, 0.7, -0.2, 0.4)
    for name in ("exp", "sin", "cos"):
        got = oracle.power_series_sum(oracle.taylor_coefficients(name, 40), x)
        assert close(got, af.evaluate(af.named(name), x), 1e-14)
    with pytest.raises(ValueError):
        oracle.taylor_coefficients("tan")


def test_finite_difference_slope():
    x, d = Quaternion(0.1, 0.7, -0.2, 0.4), Quaternion(0, 0.3, 1, 0)
    f = af.sin()
    rep = oracle.finite_difference_slope(lambda y: af.evaluate(f, y), x, d, dcal(f, x, d))
    assert 1.8 <= rep.slope <= 2.2
