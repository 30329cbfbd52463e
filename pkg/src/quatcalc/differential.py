"""First- and second-order differentials of quaternion functions.

The first-order differential at ``x`` along ``delta`` is::

    D F(x) = F'(x) delta_par + (F(x) - F(x*)) (x - x*)^-1 delta_perp

where ``delta_par`` commutes with ``x`` and ``delta_perp`` satisfies
``delta_perp x = x* delta_perp``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import analytic
from .analytic import AnalyticFunction
from .errors import PureRealInput
from .quaternion import Quaternion, TangentSplit, polar, qmul_arr, split


@dataclass(frozen=True)
class DifferentialResult:
    value: Quaternion
    split: TangentSplit
    order: int


def split_arr(xs: np.ndarray, deltas: np.ndarray):
    """Batched ``(parallel, perp)`` split.

    On rows where ``x`` is real the real part of ``delta`` counts as parallel
    and the imaginary part as perpendicular.
    """
    _, _, u, is_real = analytic.frames(xs)
    deltas = np.asarray(deltas, dtype=float)
    udu = qmul_arr(qmul_arr(u, deltas), u)
    par = 0.5 * (deltas - udu)
    perp = 0.5 * (deltas + udu)
    if np.any(is_real):
        mask = np.broadcast_to(is_real, par.shape[:-1])
        par[mask] = 0.0
        par[mask, 0] = np.broadcast_to(deltas, par.shape)[mask, 0]
        perp[mask] = np.broadcast_to(deltas, par.shape)[mask]
        perp[mask, 0] = 0.0
    return par, perp


def dcal_arr(f: AnalyticFunction, xs: np.ndarray, deltas: np.ndarray) -> np.ndarray:
    """Row-wise ``D F(x_n)`` along ``delta_n``."""
    xs = np.asarray(xs, dtype=float)
    par, perp = split_arr(xs, deltas)
    fprime = analytic.derivative_eval_arr(f, xs)
    ratio = analytic.perp_ratio_arr(f, xs)
    return qmul_arr(fprime, par) + qmul_arr(ratio, perp)


def _split_or_real(x: Quaternion, delta: Quaternion) -> TangentSplit:
    try:
        return split(x, delta)
    except PureRealInput:
        return TangentSplit(Quaternion(delta.q0), delta.imag, None)


def differential(f: AnalyticFunction, x, delta, order: int = 1) -> DifferentialResult:
    x = Quaternion.coerce(x)
    delta = Quaternion.coerce(delta)
    if order == 1:
        value = dcal(f, x, delta)
    elif order == 2:
        value = dcal2(f, x, delta)
    else:
        raise ValueError("order must be 1 or 2")
    return DifferentialResult(value, _split_or_real(x, delta), order)


def dcal(f: AnalyticFunction, x, delta) -> Quaternion:
    """First-order differential ``F'(x) delta_par + dF/dx_perp delta_perp``.

    At real ``x`` this is the continuous extension ``F'(x0) delta``.
    """
    x = Quaternion.coerce(x)
    delta = Quaternion.coerce(delta)
    out = dcal_arr(f, x.to_array()[None, :], delta.to_array()[None, :])
    return Quaternion(*out[0])


def dcal2(f: AnalyticFunction, x, delta) -> Quaternion:
    """Second-order term of ``F(x + delta)``, products taken left to right as written::

        1/2 F''(x) d_par^2
        + (F(x) - F(x*)) (x - x*)^-2 (d_perp d_par - d d_perp)
        + F'(x) (x - x*)^-1 d d_perp
        + F'(x*) (x* - x)^-1 d_perp d_par
    """
    x = Quaternion.coerce(x)
    d = Quaternion.coerce(delta)
    if x.imag_radius() <= analytic.R_SWITCH:
        raise PureRealInput("second-order term is only defined off the real axis")
    sp = split(x, d)
    par, perp = sp.parallel, sp.perp
    xc = x.conj()
    inv = (x - xc).inverse()
    inv_c = (xc - x).inverse()
    fx = analytic.evaluate(f, x)
    fxc = analytic.evaluate_conj(f, x)
    f1 = analytic.eval_derivative(f, x, 1)
    f1c = Quaternion(*analytic.derivative_eval_arr(f, x.to_array()[None, :], 1, conjugate=True)[0])
    f2 = analytic.eval_derivative(f, x, 2)
    return (f2 * par * par * 0.5
            + (fx - fxc) * inv * inv * (perp * par - d * perp)
            + f1 * inv * d * perp
            + f1c * inv_c * perp * par)


def commutator_form(f: AnalyticFunction, x, delta) -> Quaternion:
    """Perpendicular term written as ``[C, F(x)]`` with ``C = (x* - x)^-1 delta_perp``."""
    x = Quaternion.coerce(x)
    sp = split(x, Quaternion.coerce(delta))
    c = (x.conj() - x).inverse() * sp.perp
    fx = analytic.evaluate(f, x)
    return c * fx - fx * c


def d_unit_imaginary(x, delta) -> Quaternion:
    """Change of the unit imaginary ``u_x`` along ``delta``: ``delta_perp / r``."""
    sp = split(Quaternion.coerce(x), Quaternion.coerce(delta))
    return sp.perp / sp.frame.r


def unit_imaginary(x) -> Quaternion:
    return polar(Quaternion.coerce(x)).u
