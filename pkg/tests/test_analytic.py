import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatcalc import analytic as af
from quatcalc import oracle
from quatcalc.errors import DomainError
from quatcalc.quaternion import I, J, K, Quaternion


def close(a, b, tol=1e-12):
    return (Quaternion.coerce(a) - Quaternion.coerce(b)).norm() <= tol


def test_eval_examples():
    assert close(af.evaluate(af.power(2), Quaternion(1, 1)), 2 * I)
    assert close(af.evaluate(af.exp(), J * (math.pi / 2)), J, 1e-14)
    series = oracle.power_series_sum(oracle.taylor_coefficients("exp", 40), J * (math.pi / 2))
    assert close(af.evaluate(af.exp(), J * (math.pi / 2)), series, 1e-14)
    assert close(af.evaluate(af.poly([J, J]), I), J - K)


def test_eval_on_real_axis_is_ordinary():
    for name, fn in (("exp", math.exp), ("sin", math.sin), ("cos", math.cos), ("log", math.log)):
        assert close(af.evaluate(af.named(name), 0.7), fn(0.7), 1e-15)


def test_lift_matches_complex_function_on_i_axis():
    z = 0.4 + 1.3j
    assert close(af.evaluate(af.sin(), Quaternion(0.4, 1.3)), [cmath.sin(z).real, cmath.sin(z).imag, 0, 0])


def test_scaled_function_is_left_multiple():
    x = Quaternion(0.2, 0.5, -1, 0.3)
    f = af.scaled(J, af.exp())
    assert close(af.evaluate(f, x), J * af.evaluate(af.exp(), x), 1e-14)


def test_conjugate_evaluation():
    x = Quaternion(0.2, 0.5, -1, 0.3)
    assert close(af.evaluate_conj(af.exp(), x), af.evaluate(af.exp(), x.conj()), 1e-15)


def test_domain_errors():
    with pytest.raises(DomainError):
        af.evaluate(af.log(), Quaternion(-1.0))
    with pytest.raises(DomainError):
        af.evaluate(af.recip(), Quaternion(0.0))
    with pytest.raises(DomainError):
        af.evaluate(af.power(-2), Quaternion(0.0))
    # off the axis the branch cut is no obstacle
    assert close(af.evaluate(af.exp(), af.evaluate(af.log(), Quaternion(-1, 0, 1e-3))), Quaternion(-1, 0, 1e-3))


def test_derivative_examples():
    d = af.derivative(af.power(3))
    assert d.kind == "pow" and d.n == 2 and d.scale == Quaternion(3)
    assert af.derivative(af.exp()) == af.exp()
    assert af.derivative(af.sin()) == af.cos()
    assert af.derivative(af.power(0)) == af.ZERO_FUNCTION
    x = Quaternion(0.3, 0.4, 0.1, -0.2)
    assert close(af.eval_derivative(af.log(), x), x.inverse(), 1e-14)


def test_derivative_of_series_is_shifted():
    f = af.poly([1.0, 2.0, 3.0], center=0.5)
    d = af.derivative(f)
    assert [c.q0 for c in d.coeffs] == [2.0, 6.0] and d.center == 0.5


def test_perp_ratio_examples():
    assert close(af.perp_ratio(af.power(2), Quaternion(1, 1)), 2)
    assert close(af.perp_ratio(af.exp(), I * (math.pi / 2)), 2 / math.pi, 1e-15)
    assert close(af.perp_ratio(af.power(2), 3.0), 6)


def test_perp_ratio_limit_is_continuous():
    x0, u = 0.7, (I + K) / math.sqrt(2)
    for f in (af.exp(), af.sin(), af.power(5), af.log()):
        fp = af.eval_derivative(f, x0)
        e1, e2 = ((af.perp_ratio(f, u * r + x0) - fp).norm() for r in (1e-2, 1e-3))
        assert 80 <= e1 / e2 <= 120
        # either side of the switch radius agrees
        below = af.perp_ratio(f, u * 0.99e-6 + x0)
        above = af.perp_ratio(f, u * 1.01e-6 + x0)
        assert close(below, above, 1e-9)


def test_perp_ratio_is_real_for_real_coefficients():
    x = Quaternion(0.3, -1.1, 0.4, 0.9)
    for f in (af.exp(), af.cos(), af.power(4)):
        assert af.perp_ratio(f, x).imag_radius() == 0.0


def test_left_coefficient_lift_componentwise():
    f = af.poly([Quaternion(1, 2, 0, 0), Quaternion(0, 0, 3, 1)])
    x = Quaternion(0.1, 0.2, 0.3, 0.4)
    assert close(af.evaluate(f, x), Quaternion(1, 2) + Quaternion(0, 0, 3, 1) * x, 1e-15)


def test_combinator_restrictions():
    with pytest.raises(ValueError):
        af.product(af.exp(), af.poly([J]))
    with pytest.raises(ValueError):
        af.AnalyticFunction("tan")


def test_chain_and_product_evaluate_pointwise():
    x = Quaternion(0.3, 0.4, -0.2, 0.1)
    assert close(af.evaluate(af.compose(af.exp(), af.sin()), x),
                 af.evaluate(af.exp(), af.evaluate(af.sin(), x)), 1e-14)
    assert close(af.evaluate(af.product(af.exp(), af.cos()), x),
                 af.evaluate(af.exp(), x) * af.evaluate(af.cos(), x), 1e-14)


@pytest.mark.parametrize("text", ["exp", "sin", "cos", "log", "recip", "pow:3", "pow:-2",
                                  "poly:[1,2.5,-3]", "poly:[[0,1,0,0],2,[1,0,0,-0.5]]", "poly:[]"])
def test_grammar_round_trip(text):
    f = af.parse_spec(text)
    canonical = af.to_spec(f)
    assert af.parse_spec(canonical) == f
    assert af.to_spec(af.parse_spec(canonical)) == canonical


@pytest.mark.parametrize("text", ["tan", "pow:x", "poly:[1,", "poly:{}", "poly:[[1,2]]", "poly:[true]", ""])
def test_grammar_rejects(text):
    with pytest.raises(ValueError):
        af.parse_spec(text)


coef = st.one_of(st.floats(allow_nan=False, allow_infinity=False),
                 st.lists(st.floats(allow_nan=False, allow_infinity=False), min_size=4, max_size=4))


@settings(max_examples=200, deadline=None)
@given(st.lists(coef, max_size=6))
def test_grammar_round_trip_is_bit_exact(items):
    f = af.poly([Quaternion.coerce(c) for c in items])
    g = af.parse_spec(af.to_spec(f))
    a = np.array([c.to_list() for c in f.coeffs]).reshape(-1, 4)
    b = np.array([c.to_list() for c in g.coeffs]).reshape(-1, 4)
    assert a.tobytes() == b.tobytes()
