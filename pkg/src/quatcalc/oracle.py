"""Brute-force references that the closed forms are checked against.

Each routine reaches its answer by a road that avoids the closed forms in
:mod:`quatcalc.differential` (explicit noncommutative expansion, quadrature,
finite differences); only the residual helpers call into it, as the thing
under test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import analytic
from .analytic import AnalyticFunction
from .differential import dcal, dcal2
from .errors import DegenerateResidual
from .quaternion import ONE, ZERO, Quaternion, qmul_arr

DEFAULT_EPSILONS = (1e-2, 1e-3, 1e-4)
DEGENERATE_LEVEL = 1e-14


@dataclass(frozen=True)
class SlopeReport:
    epsilons: tuple
    residuals: tuple
    slope: float
    r2: float

    def __post_init__(self):
        if len(self.epsilons) != len(self.residuals) or len(self.epsilons) < 3:
            raise ValueError("need at least three (epsilon, residual) pairs")
        if any(b >= a for a, b in zip(self.epsilons, self.epsilons[1:])):
            raise ValueError("epsilons must be strictly decreasing")

    @property
    def usable(self) -> bool:
        """Fit quality is good enough to trust the slope."""
        return self.r2 >= 0.99


def fit_slope(epsilons: Sequence[float], residuals: Sequence[float]) -> SlopeReport:
    """Least-squares slope of ``log(residual)`` against ``log(epsilon)``."""
    eps = np.asarray(epsilons, dtype=float)
    res = np.asarray(residuals, dtype=float)
    if np.all(res < DEGENERATE_LEVEL):
        raise DegenerateResidual(f"all residuals below {DEGENERATE_LEVEL:g}: {res.tolist()}")
    lx = np.log(eps)
    ly = np.log(np.maximum(res, 1e-300))
    slope, icpt = np.polyfit(lx, ly, 1)
    pred = slope * lx + icpt
    ss_res = float(np.sum((ly - pred) ** 2))
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 0.0
    return SlopeReport(tuple(eps.tolist()), tuple(res.tolist()), float(slope), r2)


def direct_power_first_order(n: int, x, delta) -> Quaternion:
    """``sum_{m=0}^{n-1} x^(n-m-1) delta x^m``: every placement of ``delta`` in ``x^n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    x = Quaternion.coerce(x)
    delta = Quaternion.coerce(delta)
    powers = [ONE]
    for _ in range(n - 1):
        powers.append(powers[-1] * x)
    total = ZERO
    for m in range(n):
        total = total + powers[n - m - 1] * delta * powers[m]
    return total


def direct_power_second_order(n: int, x, delta) -> Quaternion:
    """Sum over all words in ``x^n`` with exactly two factors replaced by ``delta``."""
    x = Quaternion.coerce(x)
    delta = Quaternion.coerce(delta)
    total = ZERO
    for a in range(n):
        for b in range(a + 1, n):
            word = ONE
            for pos in range(n):
                word = word * (delta if pos in (a, b) else x)
            total = total + word
    return total


def power_series_sum(coeffs: Sequence, x) -> Quaternion:
    """``sum_n c_n x^n`` by Horner's rule in quaternion arithmetic."""
    x = Quaternion.coerce(x)
    acc = ZERO
    for c in reversed(list(coeffs)):
        acc = acc * x + Quaternion.coerce(c)
    return acc


def taylor_coefficients(name: str, terms: int = 60) -> list[float]:
    """Maclaurin coefficients of exp, sin or cos."""
    out = []
    for n in range(terms):
        fact = math.factorial(n)
        if name == "exp":
            out.append(1.0 / fact)
        elif name == "sin":
            out.append(0.0 if n % 2 == 0 else (-1.0) ** (n // 2) / fact)
        elif name == "cos":
            out.append(0.0 if n % 2 else (-1.0) ** (n // 2) / fact)
        else:
            raise ValueError(f"no Maclaurin table for {name!r}")
    return out


def exp_expansion_quadrature(x, delta, nodes: int = 64) -> Quaternion:
    """Gauss-Legendre value of ``int_0^1 exp((1-s) x) delta exp(s x) ds``."""
    if nodes < 8:
        raise ValueError("use at least 8 nodes")
    x = Quaternion.coerce(x).to_array()
    delta = Quaternion.coerce(delta).to_array()
    t, w = np.polynomial.legendre.leggauss(nodes)
    s = 0.5 * (t + 1.0)
    w = 0.5 * w
    f = analytic.exp()
    left = analytic.eval_arr(f, (1.0 - s)[:, None] * x)
    right = analytic.eval_arr(f, s[:, None] * x)
    integrand = qmul_arr(qmul_arr(left, delta), right)
    return Quaternion(*(w @ integrand))


def residual_slope(f: AnalyticFunction, x, delta, order: int = 1,
                   epsilons: Sequence[float] = DEFAULT_EPSILONS) -> SlopeReport:
    """Convergence slope of the truncated expansion ``F(x + eps delta)``.

    Order 1 should give slope 2 and order 2 slope 3.  Raises
    :class:`DegenerateResidual` when the truncation is exact.
    """
    x = Quaternion.coerce(x)
    delta = Quaternion.coerce(delta)
    fx = analytic.evaluate(f, x)
    d1 = dcal(f, x, delta)
    d2 = dcal2(f, x, delta) if order == 2 else ZERO
    residuals = []
    for eps in epsilons:
        res = analytic.evaluate(f, x + delta * eps) - fx - d1 * eps
        if order == 2:
            res = res - d2 * (eps * eps)
        residuals.append(res.norm())
    return fit_slope(epsilons, residuals)


def finite_difference_slope(func: Callable[[Quaternion], Quaternion], x, delta,
                            predicted: Quaternion,
                            epsilons: Sequence[float] = DEFAULT_EPSILONS) -> SlopeReport:
    """Slope of ``|func(x + eps delta) - func(x) - eps predicted|`` against eps."""
    x = Quaternion.coerce(x)
    delta = Quaternion.coerce(delta)
    base = func(x)
    res = [(func(x + delta * eps) - base - predicted * eps).norm() for eps in epsilons]
    return fit_slope(epsilons, res)
