import numpy as np
import pytest

from quatcalc import analytic as af
from quatcalc import su2
from quatcalc.errors import PureScalarInput
from quatcalc.su2 import ID2, J1, J2, J3, Su2Element, commutator


def test_algebra():
    assert np.allclose(commutator(J1, J2), J3, atol=1e-15)
    assert np.allclose(commutator(J2, J3), J1, atol=1e-15)
    assert np.allclose(commutator(J3, J1), J2, atol=1e-15)


def test_coefficients_round_trip():
    x = Su2Element((0.5, -1, 2, 0.25))
    assert Su2Element.from_matrix(x.matrix) == x
    with pytest.raises(ValueError):
        Su2Element.from_matrix(np.array([[1, 0], [0, 1j]]))
    with pytest.raises(ValueError):
        Su2Element((1, 2))


def test_split_examples():
    par, perp = su2.su2_split(Su2Element((0, 0, 0, 1)), Su2Element((0, 1, 0, 0)))
    assert np.allclose(par.coeffs, 0, atol=1e-15) and np.allclose(perp.coeffs, (0, 1, 0, 0), atol=1e-15)
    x = Su2Element((0.3, 1, -2, 0.5))
    along = Su2Element((0, 2, -4, 1))
    par, perp = su2.su2_split(x, along)
    assert np.allclose(par.coeffs, along.coeffs, atol=1e-14) and np.allclose(perp.coeffs, 0, atol=1e-14)
    par, perp = su2.su2_split(x, Su2Element((1, 0, 0, 0)))
    assert np.allclose(par.coeffs, (1, 0, 0, 0), atol=1e-15) and np.allclose(perp.coeffs, 0, atol=1e-15)
    with pytest.raises(PureScalarInput):
        su2.su2_split(Su2Element((2, 0, 0, 0)), along)


def test_first_order_examples():
    got = su2.su2_first_order(af.power(2), Su2Element((1, 0, 0, 1)), Su2Element((0, 1, 0, 0)))
    assert np.max(np.abs(got - 2 * J1)) <= 1e-13
    got = su2.su2_first_order(af.power(2), Su2Element((0, 0, 0, 1)), Su2Element((0, 1, 0, 0)))
    assert np.max(np.abs(got)) <= 1e-13
    x = Su2Element((0.2, 0.4, -0.3, 0.9))
    derivs = ((af.exp(), su2.matrix_function_oracle(af.exp(), x.matrix)),
              (af.power(3), 3 * x.matrix @ x.matrix),
              (af.sin(), su2.matrix_function_oracle(af.cos(), x.matrix)))
    for f, want in derivs:
        got = su2.su2_first_order(f, x, Su2Element((1, 0, 0, 0)))
        assert np.max(np.abs(got - want)) <= 1e-12


def test_first_order_matches_product_expansion():
    x, d = Su2Element((0.2, 0.4, -0.3, 0.9)), Su2Element((0.1, -0.5, 0.7, 0.2))
    xm, dm = x.matrix, d.matrix
    want = xm @ xm @ dm + xm @ dm @ xm + dm @ xm @ xm
    assert np.max(np.abs(su2.su2_first_order(af.power(3), x, d) - want)) <= 1e-13


def test_matrix_function_agrees_with_oracle():
    m = Su2Element((0.3, 1.1, -0.4, 0.7)).matrix
    for f in (af.exp(), af.sin(), af.cos(), af.power(5), af.power(-2), af.poly([1.0, -2.0, 0.5])):
        assert np.max(np.abs(su2.matrix_function(f, m) - su2.matrix_function_oracle(f, m))) <= 1e-12
    assert np.allclose(su2.matrix_function(af.exp(), 2 * ID2), np.exp(2) * ID2)
    with pytest.raises(ValueError):
        su2.matrix_function(af.exp(), np.array([[1, 1], [0, 1]], dtype=complex))
    with pytest.raises(ValueError):
        su2.matrix_function(af.poly([[0, 1, 0, 0]]), m)


def test_group_element_is_unitary():
    g = su2.group_element((1, 2, -1), 0.7)
    assert np.allclose(g @ g.conj().T, ID2, atol=1e-14)
    assert abs(np.linalg.det(g) - 1) <= 1e-14
