"""Line integrals along polyline paths in quaternion space.

Both integrals are Riemann-type sums over a refinement of the path, with each
term evaluated at the start of its increment.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path as FsPath

import numpy as np

from . import analytic
from .analytic import AnalyticFunction
from .differential import dcal_arr
from .errors import AntiderivativeMismatch
from .quaternion import Quaternion, qmul_arr

ANTIDERIVATIVE_CHECK_POINTS = np.linspace(0.3, 1.2, 10)


@dataclass(frozen=True)
class Path:
    """Polyline through ``waypoints``; every leg is cut into ``segments_per_leg`` pieces."""

    waypoints: tuple
    segments_per_leg: int

    def __post_init__(self):
        pts = tuple(Quaternion.coerce(w) for w in self.waypoints)
        object.__setattr__(self, "waypoints", pts)
        if len(pts) < 2:
            raise ValueError("a path needs at least two waypoints")
        if int(self.segments_per_leg) != self.segments_per_leg or self.segments_per_leg < 1:
            raise ValueError("segments_per_leg must be a positive integer")
        object.__setattr__(self, "segments_per_leg", int(self.segments_per_leg))
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise ValueError(f"consecutive waypoints coincide: {a!r}")

    @property
    def start(self) -> Quaternion:
        return self.waypoints[0]

    @property
    def end(self) -> Quaternion:
        return self.waypoints[-1]

    @property
    def is_closed(self) -> bool:
        return self.start == self.end

    def points(self) -> np.ndarray:
        """All refinement points ``x_0 .. x_M``, shape (M + 1, 4); waypoints are hit exactly."""
        n = self.segments_per_leg
        t = np.arange(n)[:, None] / n
        legs = []
        for a, b in zip(self.waypoints, self.waypoints[1:]):
            a, b = a.to_array(), b.to_array()
            legs.append(a + t * (b - a))
        legs.append(self.end.to_array()[None, :])
        return np.concatenate(legs)

    def increments(self):
        """``(starts, deltas)`` with ``deltas[n] = x_{n+1} - x_n``."""
        pts = self.points()
        return pts[:-1], np.diff(pts, axis=0)

    def refined(self, segments_per_leg: int) -> "Path":
        return Path(self.waypoints, segments_per_leg)

    def then(self, other: "Path") -> "Path":
        """Concatenation; ``other`` must start where this path ends."""
        if other.start != self.end or other.segments_per_leg != self.segments_per_leg:
            raise ValueError("paths do not join (endpoint or refinement differ)")
        return Path(self.waypoints + other.waypoints[1:], self.segments_per_leg)

    def to_json(self) -> dict:
        return {"waypoints": [w.to_list() for w in self.waypoints],
                "segments_per_leg": self.segments_per_leg}

    @classmethod
    def from_json(cls, data: dict) -> "Path":
        try:
            waypoints = data["waypoints"]
            n = data["segments_per_leg"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"path JSON needs 'waypoints' and 'segments_per_leg': {exc}") from None
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError("segments_per_leg must be an integer")
        if not isinstance(waypoints, list):
            raise ValueError("waypoints must be a list of 4-arrays")
        return cls(tuple(Quaternion.coerce(w) for w in waypoints), n)

    @classmethod
    def load(cls, filename) -> "Path":
        return cls.from_json(json.loads(FsPath(filename).read_text()))


def _reduce(terms: np.ndarray) -> Quaternion:
    # fixed-order exact summation keeps results reproducible and telescoping sums tight
    return Quaternion(*(math.fsum(terms[:, c]) for c in range(4)))


def endpoint_difference(f: AnalyticFunction, path: Path) -> Quaternion:
    return analytic.evaluate(f, path.end) - analytic.evaluate(f, path.start)


def real_axis_hits(path: Path) -> int:
    """Number of increments whose start point lies on the real axis."""
    starts, _ = path.increments()
    return int(np.count_nonzero(analytic.frames(starts)[3]))


def line_integral_D(f: AnalyticFunction, path: Path) -> Quaternion:
    """Sum of ``D F(x_{n-1})`` along ``delta_n = x_n - x_{n-1}``; tends to ``F(b) - F(a)``."""
    starts, deltas = path.increments()
    return _reduce(dcal_arr(f, starts, deltas))


def line_integral_parts(f: AnalyticFunction, g: AnalyticFunction, path: Path):
    """Both sides of the integration-by-parts identity.

    ``lhs = int F D G`` and ``rhs = F(b) G(b) - F(a) G(a) - int (D F) G``.
    """
    if not (f.is_real and g.is_real):
        raise ValueError("integration by parts needs real-coefficient functions")
    starts, deltas = path.increments()
    fv = analytic.eval_arr(f, starts)
    gv = analytic.eval_arr(g, starts)
    lhs = _reduce(qmul_arr(fv, dcal_arr(g, starts, deltas)))
    tail = _reduce(qmul_arr(dcal_arr(f, starts, deltas), gv))
    a, b = path.start, path.end
    boundary = (analytic.evaluate(f, b) * analytic.evaluate(g, b)
                - analytic.evaluate(f, a) * analytic.evaluate(g, a))
    return lhs, boundary - tail


def symmetric_integral(n: int, path: Path) -> Quaternion:
    """``1/(n+1) int (dx x^n + x dx x^(n-1) + ... + x^n dx)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    starts, deltas = path.increments()
    powers = [np.broadcast_to(np.array([1.0, 0.0, 0.0, 0.0]), starts.shape)]
    for _ in range(n):
        powers.append(qmul_arr(powers[-1], starts))
    terms = np.zeros_like(starts)
    for m in range(n + 1):
        terms += qmul_arr(qmul_arr(powers[m], deltas), powers[n - m])
    return _reduce(terms / (n + 1))


def symmetric_closed_form(n: int, path: Path) -> Quaternion:
    """``(b^(n+1) - a^(n+1)) / (n+1)``."""
    return (path.end ** (n + 1) - path.start ** (n + 1)) / (n + 1)


def check_antiderivative(f: AnalyticFunction, h: AnalyticFunction, tol: float = 1e-10) -> None:
    """Raise :class:`AntiderivativeMismatch` unless ``h' = f`` at sample real points."""
    pts = np.zeros((len(ANTIDERIVATIVE_CHECK_POINTS), 4))
    pts[:, 0] = ANTIDERIVATIVE_CHECK_POINTS
    want = analytic.eval_arr(f, pts)
    got = analytic.derivative_eval_arr(h, pts)
    err = np.max(np.abs(got - want) / (1.0 + np.abs(want)))
    if not err <= tol:
        raise AntiderivativeMismatch(f"h' differs from f by {err:.3g} at real sample points")


def antiderivative_rule(f_integrand: AnalyticFunction, h_antiderivative: AnalyticFunction,
                        path: Path) -> Quaternion:
    """Integral of ``f`` realised as ``int D h`` for a known antiderivative ``h``."""
    check_antiderivative(f_integrand, h_antiderivative)
    return line_integral_D(h_antiderivative, path)
