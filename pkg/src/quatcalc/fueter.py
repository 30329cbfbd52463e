"""Fueter's box operator and the four-dimensional Laplacian.

``box = d/dx0 + i d/dx1 + j d/dx2 + k d/dx3`` with the units multiplying from
the left.  For real-coefficient functions it equals ``-2`` times the
perpendicular partial, which is what :func:`box_analytic` returns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from . import analytic
from .analytic import AnalyticFunction
from .quaternion import UNITS, Quaternion, qmul_arr

FIRST_DERIVATIVE_H = 1e-4
SECOND_DERIVATIVE_H = 1e-3

_FIRST = {
    2: ((1, 0.5), (-1, -0.5)),
    4: ((2, -1 / 12), (1, 8 / 12), (-1, -8 / 12), (-2, 1 / 12)),
}
_SECOND = {
    2: ((1, 1.0), (0, -2.0), (-1, 1.0)),
    4: ((2, -1 / 12), (1, 16 / 12), (0, -30 / 12), (-1, 16 / 12), (-2, -1 / 12)),
}


@dataclass(frozen=True)
class StencilConfig:
    h: float = FIRST_DERIVATIVE_H
    order: int = 2

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError("step size must be positive")
        if self.order not in (2, 4):
            raise ValueError("stencil order must be 2 or 4")


QuaternionField = Callable[[Quaternion], Union[Quaternion, float]]


def box_analytic(f: AnalyticFunction, x) -> Quaternion:
    """``box F(x) = -2 (F(x) - F(x*)) (x - x*)^-1`` for real-coefficient ``F``."""
    if not f.is_real:
        raise ValueError("box_analytic needs a real-coefficient function")
    return analytic.perp_ratio(f, x) * -2.0


def _partials(f, x: Quaternion, cfg: StencilConfig) -> np.ndarray:
    """Rows ``dF/dx_mu`` (shape (4, 4)) by central differences."""
    taps = _FIRST[cfg.order]
    base = x.to_array()
    eye = np.eye(4)
    points = np.array([base + k * cfg.h * eye[mu] for mu in range(4) for k, _ in taps])
    if isinstance(f, AnalyticFunction):
        values = analytic.eval_arr(f, points)
    else:
        values = np.array([Quaternion.coerce(f(Quaternion(*p))).to_list() for p in points])
    values = values.reshape(4, len(taps), 4)
    weights = np.array([w for _, w in taps])
    return np.einsum("t,mtc->mc", weights, values) / cfg.h


def box_numeric(f: Union[AnalyticFunction, QuaternionField], x,
                cfg: StencilConfig = StencilConfig()) -> Quaternion:
    """Finite-difference ``d0 F + i d1 F + j d2 F + k d3 F``."""
    x = Quaternion.coerce(x)
    d = _partials(f, x, cfg)
    units = np.array([q.to_list() for q in UNITS])
    return Quaternion(*qmul_arr(units, d).sum(axis=0))


def laplacian4(g: QuaternionField, x,
               cfg: StencilConfig = StencilConfig(SECOND_DERIVATIVE_H)) -> Quaternion:
    """Sum of the four second partials of ``g`` (componentwise for quaternion values)."""
    x = Quaternion.coerce(x)
    taps = _SECOND[cfg.order]
    base = x.to_array()
    total = np.zeros(4)
    centre = None
    for mu in range(4):
        step = np.zeros(4)
        step[mu] = cfg.h
        for k, w in taps:
            if k == 0:
                if centre is None:
                    centre = Quaternion.coerce(g(x)).to_array()
                val = centre
            else:
                val = Quaternion.coerce(g(Quaternion(*(base + k * step)))).to_array()
            total += w * val
    return Quaternion(*(total / cfg.h ** 2))
