"""First-order expansion for functions of an su(2)-valued variable.

Elements ``x0 I + x1 J1 + x2 J2 + x3 J3`` live in the spin-1/2 representation
``Ja = -(i/2) sigma_a`` so that ``[J1, J2] = J3`` (and cyclic).  All splits are
computed frame-free from commutators with ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .analytic import AnalyticFunction, derivative
from .errors import PureScalarInput

SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
ID2 = np.eye(2, dtype=complex)
J1, J2, J3 = (-0.5j * s for s in SIGMA)
BASIS = (ID2, J1, J2, J3)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def _check_algebra():
    for a, b, c in ((J1, J2, J3), (J2, J3, J1), (J3, J1, J2)):
        if np.max(np.abs(commutator(a, b) - c)) > 1e-15:
            raise RuntimeError("spin-1/2 generators violate [Ja, Jb] = Jc")


_check_algebra()


@dataclass(frozen=True)
class Su2Element:
    """``x0 I + x1 J1 + x2 J2 + x3 J3`` with real coefficients."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(float(v) for v in self.coeffs)
        if len(c) != 4:
            raise ValueError("an su(2) element has four coefficients")
        object.__setattr__(self, "coeffs", c)

    @property
    def matrix(self) -> np.ndarray:
        return sum(c * b for c, b in zip(self.coeffs, BASIS))

    @property
    def r(self) -> float:
        return float(np.sqrt(sum(c * c for c in self.coeffs[1:])))

    @classmethod
    def from_matrix(cls, m: np.ndarray, atol: float = 1e-12) -> "Su2Element":
        c = matrix_coeffs(m)
        if np.max(np.abs(c.imag)) > atol * (1.0 + np.max(np.abs(c))):
            raise ValueError("matrix is not in the real span of I, J1, J2, J3")
        return cls(tuple(c.real))

    def __add__(self, other: "Su2Element") -> "Su2Element":
        return Su2Element(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Su2Element") -> "Su2Element":
        return Su2Element(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, s: float) -> "Su2Element":
        return Su2Element(tuple(s * a for a in self.coeffs))


def matrix_coeffs(m: np.ndarray) -> np.ndarray:
    """Complex coordinates of a 2x2 matrix in the basis (I, J1, J2, J3).

    Uses ``tr(Ja Jb) = -delta_ab / 2``.
    """
    m = np.asarray(m, dtype=complex)
    return np.array([np.trace(m) / 2] + [-2.0 * np.trace(m @ j) for j in (J1, J2, J3)])


def _r_min(x: Su2Element) -> float:
    return 1e-12 * (1.0 + float(np.sqrt(sum(c * c for c in x.coeffs))))


def su2_split(x: Su2Element, delta: Su2Element):
    """``perp = -[x, [x, delta]] / r^2`` and ``parallel = delta - perp``."""
    r = x.r
    if r <= _r_min(x):
        raise PureScalarInput("element is a multiple of the identity; no split exists")
    xm, dm = x.matrix, delta.matrix
    perp = -commutator(xm, commutator(xm, dm)) / r ** 2
    perp_el = Su2Element.from_matrix(perp)
    return delta - perp_el, perp_el


def matrix_function(f: AnalyticFunction, m: np.ndarray, tol: float = 1e-13) -> np.ndarray:
    """``f(M)`` for a diagonalisable 2x2 matrix via its spectral projectors."""
    if not f.is_real:
        raise ValueError("matrix functions need real-coefficient functions")
    m = np.asarray(m, dtype=complex)
    half_tr = np.trace(m) / 2
    disc = np.sqrt(half_tr ** 2 - np.linalg.det(m))
    lam1, lam2 = half_tr + disc, half_tr - disc
    scale = 1.0 + np.max(np.abs(m))
    f1, f2 = f.lift(np.array([lam1, lam2]))[0]
    if abs(lam1 - lam2) <= tol * scale:
        if np.max(np.abs(m - half_tr * ID2)) > tol * scale:
            raise ValueError("defective matrix: no eigen-decomposition")
        return f1 * ID2
    p1 = (m - lam2 * ID2) / (lam1 - lam2)
    p2 = (m - lam1 * ID2) / (lam2 - lam1)
    return f1 * p1 + f2 * p2


def su2_first_order(f: AnalyticFunction, x: Su2Element, delta: Su2Element) -> np.ndarray:
    """First-order term of ``F(x + delta)`` as a 2x2 complex matrix::

        F'(x) d_par + (F(x+ir) - F(x-ir)) / (2ir) d_perp
                    + (F(x+ir) + F(x-ir) - 2F(x)) / (2r) * [x, delta] / r
    """
    if not f.is_real:
        raise ValueError("su(2) expansion needs a real-coefficient function")
    par, perp = su2_split(x, delta)
    r = x.r
    xm = x.matrix
    f_plus = matrix_function(f, xm + 1j * r * ID2)
    f_minus = matrix_function(f, xm - 1j * r * ID2)
    f_x = matrix_function(f, xm)
    f_prime = matrix_function(derivative(f), xm)
    rotated = commutator(xm, delta.matrix) / r
    return (f_prime @ par.matrix
            + (f_plus - f_minus) / (2j * r) @ perp.matrix
            + (f_plus + f_minus - 2.0 * f_x) / (2.0 * r) @ rotated)


# -- brute-force reference ----------------------------------------------------

def matrix_function_oracle(f: AnalyticFunction, m: np.ndarray) -> np.ndarray:
    """``f(M)`` by repeated products or scaling-and-squaring, never by eigenvalues.

    Supports ``pow``, real ``poly``, ``exp``, ``sin`` and ``cos`` without left scaling.
    """
    m = np.asarray(m, dtype=complex)
    if f.scale.to_list() != [1.0, 0.0, 0.0, 0.0]:
        raise NotImplementedError("oracle does not handle scaled functions")
    if f.kind == "pow":
        if f.n < 0:
            return np.linalg.matrix_power(np.linalg.inv(m), -f.n)
        return np.linalg.matrix_power(m, f.n)
    if f.kind == "poly" and f.is_real:
        y = m - f.center * ID2
        acc = np.zeros_like(m)
        for c in reversed(f.coeffs):
            acc = acc @ y + c.q0 * ID2
        return acc
    if f.kind == "exp":
        return scipy.linalg.expm(m)
    if f.kind == "sin":
        return (scipy.linalg.expm(1j * m) - scipy.linalg.expm(-1j * m)) / 2j
    if f.kind == "cos":
        return (scipy.linalg.expm(1j * m) + scipy.linalg.expm(-1j * m)) / 2
    raise NotImplementedError(f"no matrix oracle for {f.kind}")


def group_element(axis, angle: float) -> np.ndarray:
    """``exp(angle * (n . J))`` for a unit axis ``n``: an SU(2) group element."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    return scipy.linalg.expm(angle * sum(a * j for a, j in zip(n, (J1, J2, J3))))
