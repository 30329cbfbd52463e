"""Hamilton quaternions, polar form and the parallel/perpendicular split.

Components are always ordered scalar first: ``[q0, q1, q2, q3]`` stands for
``q0 + i q1 + j q2 + k q3``.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import PureRealInput

Number = numbers.Real


@dataclass(frozen=True)
class Quaternion:
    """Immutable quaternion ``q0 + i q1 + j q2 + k q3``."""

    q0: float = 0.0
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    def __post_init__(self):
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_seq(cls, values: Sequence[float]) -> "Quaternion":
        if len(values) != 4:
            raise ValueError(f"expected 4 components, got {len(values)}")
        return cls(*values)

    @classmethod
    def coerce(cls, value) -> "Quaternion":
        """Accept a Quaternion, a real number or a 4-sequence."""
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, Number):
            return cls(value)
        return cls.from_seq(list(value))

    def __iter__(self):
        return iter((self.q0, self.q1, self.q2, self.q3))

    def to_list(self) -> list[float]:
        return [self.q0, self.q1, self.q2, self.q3]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_list())

    @property
    def real(self) -> float:
        return self.q0

    @property
    def imag(self) -> "Quaternion":
        return Quaternion(0.0, self.q1, self.q2, self.q3)

    def __add__(self, other):
        if isinstance(other, Number):
            return Quaternion(self.q0 + other, self.q1, self.q2, self.q3)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.q0 + other.q0, self.q1 + other.q1,
                          self.q2 + other.q2, self.q3 + other.q3)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __sub__(self, other):
        if isinstance(other, Number):
            return Quaternion(self.q0 - other, self.q1, self.q2, self.q3)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.q0 - other.q0, self.q1 - other.q1,
                          self.q2 - other.q2, self.q3 - other.q3)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Number):
            return Quaternion(self.q0 * other, self.q1 * other,
                              self.q2 * other, self.q3 * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        # only reached for real scalars, which commute
        if isinstance(other, Number):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            return Quaternion(self.q0 / other, self.q1 / other,
                              self.q2 / other, self.q3 / other)
        return NotImplemented

    def __pow__(self, n: int) -> "Quaternion":
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(n)):
            result = result * base
        return result

    def conj(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def norm2(self) -> float:
        return self.q0 ** 2 + self.q1 ** 2 + self.q2 ** 2 + self.q3 ** 2

    def norm(self) -> float:
        return math.hypot(self.q0, self.q1, self.q2, self.q3)

    def imag_radius(self) -> float:
        return math.hypot(self.q1, self.q2, self.q3)

    def inverse(self) -> "Quaternion":
        n2 = self.norm2()
        if n2 == 0.0:
            raise ZeroDivisionError("quaternion inverse of zero")
        return self.conj() / n2

    def isclose(self, other, atol: float = 1e-12, rtol: float = 1e-10) -> bool:
        other = Quaternion.coerce(other)
        return all(abs(a - b) <= atol + rtol * abs(b) for a, b in zip(self, other))

    def __repr__(self):
        return f"Quaternion({self.q0!r}, {self.q1!r}, {self.q2!r}, {self.q3!r})"


ONE = Quaternion(1.0)
ZERO = Quaternion()
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
UNITS = (ONE, I, J, K)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a b``."""
    a0, a1, a2, a3 = a.q0, a.q1, a.q2, a.q3
    b0, b1, b2, b3 = b.q0, b.q1, b.q2, b.q3
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def conj(q: Quaternion) -> Quaternion:
    return q.conj()


def norm(q: Quaternion) -> float:
    return q.norm()


def qprod(*factors: Quaternion) -> Quaternion:
    """Left-to-right product of any number of quaternions."""
    result = ONE
    for f in factors:
        result = result * f
    return result


def r_min(x: Quaternion) -> float:
    """Imaginary radius below which ``x`` counts as real."""
    return 1e-12 * (1.0 + x.norm())


@dataclass(frozen=True)
class PolarForm:
    """``x = x0 + u r`` with ``u`` a unit imaginary and ``r > 0``."""

    x0: float
    r: float
    u: Quaternion

    def reconstruct(self) -> Quaternion:
        return self.u * self.r + self.x0


@dataclass(frozen=True)
class TangentSplit:
    """A displacement split into the parts commuting and anticommuting with ``u``."""

    parallel: Quaternion
    perp: Quaternion
    frame: PolarForm


def polar(x: Quaternion) -> PolarForm:
    r = x.imag_radius()
    if r <= r_min(x):
        raise PureRealInput(f"imaginary radius {r:g} too small for a unit imaginary at {x!r}")
    return PolarForm(x.q0, r, x.imag / r)


def split(x: Quaternion, delta: Quaternion) -> TangentSplit:
    """Split ``delta`` relative to the local unit imaginary of ``x``.

    ``parallel = (delta - u delta u) / 2`` and ``perp = (delta + u delta u) / 2``.
    """
    frame = polar(x)
    u = frame.u
    udu = u * delta * u
    return TangentSplit((delta - udu) * 0.5, (delta + udu) * 0.5, frame)


# -- batched helpers over arrays of shape (..., 4) -------------------------

def as_array(qs: Iterable) -> np.ndarray:
    """Stack quaternions (or 4-sequences) into an array of shape (n, 4)."""
    return np.array([Quaternion.coerce(q).to_list() for q in qs], dtype=float)


def qmul_arr(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Broadcasting Hamilton product on arrays whose last axis has length 4."""
    a0, a1, a2, a3 = np.moveaxis(np.asarray(a), -1, 0)
    b0, b1, b2, b3 = np.moveaxis(np.asarray(b), -1, 0)
    return np.stack([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ], axis=-1)


def conj_arr(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out
