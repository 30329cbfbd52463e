"""Real-analytic functions evaluated at quaternion arguments.

A function is stored symbolically and evaluated through the complex lift:
write ``x = x0 + u r``, evaluate ``f(x0 + i r) = a + i b`` over the ordinary
complex numbers, and substitute ``u`` for ``i``.  Quaternion coefficients are
only ever allowed on the left, so a general function decomposes into four
real-coefficient component functions ``F = g0 + i g1 + j g2 + k g3`` and every
quantity can be read off the four complex lifts ``g_m(x0 + i r)``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DomainError
from .quaternion import ONE, Quaternion, qmul_arr

R_SWITCH = 1e-6

NAMED = ("exp", "sin", "cos", "log", "recip", "pow")
KINDS = NAMED + ("poly", "sum", "product", "compose")


@dataclass(frozen=True)
class AnalyticFunction:
    """Symbolic description of an admissible function.

    ``scale`` multiplies the whole function from the left.  ``coeffs`` and
    ``center`` are only used by ``poly``, ``n`` only by ``pow`` and ``parts``
    only by the combinators ``sum``, ``product`` and ``compose``.
    """

    kind: str
    n: int = 0
    coeffs: tuple = ()
    center: float = 0.0
    scale: Quaternion = ONE
    parts: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown function kind {self.kind!r}")
        object.__setattr__(self, "coeffs", tuple(Quaternion.coerce(c) for c in self.coeffs))
        object.__setattr__(self, "scale", Quaternion.coerce(self.scale))
        object.__setattr__(self, "center", float(self.center))
        if self.kind in ("product", "compose") and not self.parts[1].is_real:
            raise ValueError(f"{self.kind}: the right-hand factor must have real coefficients")

    @cached_property
    def is_real(self) -> bool:
        """True when every coefficient anywhere in the expression is real."""
        if self.scale.imag_radius() != 0.0:
            return False
        if any(c.imag_radius() != 0.0 for c in self.coeffs):
            return False
        return all(p.is_real for p in self.parts)

    # -- complex lift --------------------------------------------------------

    def lift(self, z) -> np.ndarray:
        """Complex values of the four component functions at ``z``.

        Returns an array of shape ``(4,) + shape(z)``; component ``m`` holds
        the lift of the coefficient of the m-th quaternion unit.
        """
        z = np.asarray(z, dtype=complex)
        kind = self.kind
        if kind == "poly":
            w = _poly_lift(self.coeffs, z - self.center)
        elif kind == "sum":
            w = self.parts[0].lift(z) + self.parts[1].lift(z)
        elif kind == "product":
            w = self.parts[0].lift(z) * self.parts[1].lift(z)[0]
        elif kind == "compose":
            w = self.parts[0].lift(self.parts[1].lift(z)[0])
        else:
            w = np.zeros((4,) + z.shape, dtype=complex)
            w[0] = _named_lift(kind, self.n, z)
        if self.scale != ONE:
            w = np.moveaxis(qmul_arr(self.scale.to_array(), np.moveaxis(w, 0, -1)), -1, 0)
        return w

    def __call__(self, x):
        return evaluate(self, x)

    def to_spec(self) -> str:
        return to_spec(self)


def _named_lift(kind: str, n: int, z: np.ndarray) -> np.ndarray:
    with np.errstate(all="ignore"):
        if kind == "exp":
            return np.exp(z)
        if kind == "sin":
            return np.sin(z)
        if kind == "cos":
            return np.cos(z)
        if kind == "log":
            bad = (z.imag == 0.0) & (z.real <= 0.0)
            if np.any(bad):
                raise DomainError("log: argument on the branch cut or at zero")
            return np.log(z)
        if kind == "recip":
            if np.any(z == 0):
                raise DomainError("recip: pole at zero")
            return 1.0 / z
        if kind == "pow":
            if n < 0 and np.any(z == 0):
                raise DomainError(f"pow:{n}: pole at zero")
            if n == 0:
                return np.ones_like(z)
            return z ** n
    raise ValueError(kind)


def _poly_lift(coeffs, y: np.ndarray) -> np.ndarray:
    w = np.zeros((4,) + y.shape, dtype=complex)
    for c in reversed(coeffs):
        w = w * y
        w += np.asarray(c.to_list()).reshape((4,) + (1,) * y.ndim)
    return w


# -- constructors -----------------------------------------------------------

def named(kind: str, n: int = 0, scale=ONE) -> AnalyticFunction:
    if kind not in NAMED:
        raise ValueError(f"not a named function: {kind!r}")
    return AnalyticFunction(kind, n=n if kind == "pow" else 0, scale=scale)


def exp() -> AnalyticFunction:
    return named("exp")


def sin() -> AnalyticFunction:
    return named("sin")


def cos() -> AnalyticFunction:
    return named("cos")


def log() -> AnalyticFunction:
    return named("log")


def recip() -> AnalyticFunction:
    return named("recip")


def power(n: int, scale=ONE) -> AnalyticFunction:
    return named("pow", n=int(n), scale=scale)


def poly(coeffs, center: float = 0.0) -> AnalyticFunction:
    """``sum_n c_n (x - center)^n`` with each ``c_n`` acting from the left."""
    return AnalyticFunction("poly", coeffs=tuple(coeffs), center=center)


def const(c) -> AnalyticFunction:
    return poly([c])


ZERO_FUNCTION = AnalyticFunction("poly")


def scaled(c, f: AnalyticFunction) -> AnalyticFunction:
    """Left multiple ``c f``."""
    c = Quaternion.coerce(c)
    return AnalyticFunction(f.kind, f.n, f.coeffs, f.center, c * f.scale, f.parts)


def add(f: AnalyticFunction, g: AnalyticFunction) -> AnalyticFunction:
    return AnalyticFunction("sum", parts=(f, g))


def product(f: AnalyticFunction, g: AnalyticFunction) -> AnalyticFunction:
    """Pointwise product ``f(x) g(x)``; ``g`` must have real coefficients."""
    return AnalyticFunction("product", parts=(f, g))


def compose(f: AnalyticFunction, g: AnalyticFunction) -> AnalyticFunction:
    """``f(g(x))``; the inner function must have real coefficients."""
    return AnalyticFunction("compose", parts=(f, g))


def derivative(f: AnalyticFunction) -> AnalyticFunction:
    """Derivative taken as if the argument were real; left coefficients ride along."""
    s = f.scale
    kind = f.kind
    if kind == "exp":
        return f
    if kind == "sin":
        return named("cos", scale=s)
    if kind == "cos":
        return named("sin", scale=-s)
    if kind == "log":
        return named("recip", scale=s)
    if kind == "recip":
        return power(-2, scale=-s)
    if kind == "pow":
        if f.n == 0:
            return ZERO_FUNCTION
        return power(f.n - 1, scale=s * f.n)
    if kind == "poly":
        coeffs = [c * k for k, c in enumerate(f.coeffs)][1:]
        return scaled(s, poly(coeffs, f.center))
    a, b = f.parts
    if kind == "sum":
        inner = add(derivative(a), derivative(b))
    elif kind == "product":
        inner = add(product(derivative(a), b), product(a, derivative(b)))
    else:
        inner = product(compose(derivative(a), b), derivative(b))
    return scaled(s, inner)


# -- evaluation --------------------------------------------------------------

def frames(xs: np.ndarray):
    """Per-row ``(x0, r, u, is_real)`` for an array of quaternions of shape (n, 4).

    Rows whose imaginary radius is at most ``1e-12 (1 + |x|)`` are flagged as
    real; their ``r`` and ``u`` are zeroed.
    """
    xs = np.asarray(xs, dtype=float)
    x0 = xs[..., 0]
    r = np.sqrt(np.sum(xs[..., 1:] ** 2, axis=-1))
    is_real = r <= 1e-12 * (1.0 + np.sqrt(np.sum(xs ** 2, axis=-1)))
    r = np.where(is_real, 0.0, r)
    u = np.zeros_like(xs)
    safe = np.where(is_real, 1.0, r)
    u[..., 1:] = np.where(is_real[..., None], 0.0, xs[..., 1:] / safe[..., None])
    return x0, r, u, is_real


def _combine(w: np.ndarray, u: np.ndarray, sign: float = 1.0) -> np.ndarray:
    """``Re(w) + sign * Im(w) u`` with ``w`` of shape (4, n) and ``u`` (n, 4)."""
    re = np.moveaxis(w.real, 0, -1)
    im = np.moveaxis(w.imag, 0, -1)
    return re + sign * qmul_arr(im, u)


def eval_arr(f: AnalyticFunction, xs: np.ndarray, conjugate: bool = False) -> np.ndarray:
    """Evaluate ``f`` at every row of ``xs``; ``conjugate`` evaluates at ``x*`` instead."""
    x0, r, u, _ = frames(xs)
    w = f.lift(x0 + 1j * r)
    return _combine(w, u, -1.0 if conjugate else 1.0)


def perp_ratio_arr(f: AnalyticFunction, xs: np.ndarray) -> np.ndarray:
    """``(F(x) - F(x*)) (x - x*)^-1`` for every row, with the real-axis limit."""
    x0, r, _, _ = frames(xs)
    small = r <= R_SWITCH
    w = f.lift(x0 + 1j * r)
    safe = np.where(small, 1.0, r)
    out = np.moveaxis(w.imag / safe, 0, -1)
    if np.any(small):
        d1 = _derivatives(f)[0].lift(x0[small] + 0j).real
        d3 = _derivatives(f)[2].lift(x0[small] + 0j).real
        rs = r[small]
        out[small] = np.moveaxis(d1 - d3 * rs ** 2 / 6.0, 0, -1)
    return out


def derivative_eval_arr(f: AnalyticFunction, xs: np.ndarray, order: int = 1,
                        conjugate: bool = False) -> np.ndarray:
    return eval_arr(_derivatives(f)[order - 1], xs, conjugate)


_DERIV_CACHE: dict = {}


def _derivatives(f: AnalyticFunction) -> tuple:
    """First three derivatives of ``f`` (memoised; functions are immutable)."""
    try:
        return _DERIV_CACHE[f]
    except KeyError:
        pass
    d1 = derivative(f)
    d2 = derivative(d1)
    d3 = derivative(d2)
    if len(_DERIV_CACHE) > 4096:
        _DERIV_CACHE.clear()
    _DERIV_CACHE[f] = (d1, d2, d3)
    return d1, d2, d3


def _one(x) -> np.ndarray:
    return Quaternion.coerce(x).to_array()[None, :]


def evaluate(f: AnalyticFunction, x) -> Quaternion:
    """``F(x)`` for a single quaternion ``x``."""
    return Quaternion(*eval_arr(f, _one(x))[0])


def evaluate_conj(f: AnalyticFunction, x) -> Quaternion:
    """``F(x*)``."""
    return Quaternion(*eval_arr(f, _one(x), conjugate=True)[0])


def eval_derivative(f: AnalyticFunction, x, order: int = 1) -> Quaternion:
    return Quaternion(*derivative_eval_arr(f, _one(x), order)[0])


def perp_ratio(f: AnalyticFunction, x) -> Quaternion:
    """The perpendicular partial ``(F(x) - F(x*)) (x - x*)^-1``.

    Real for real-coefficient ``F``.  For ``r <= 1e-6`` the two-term Taylor
    limit ``F'(x0) - F'''(x0) r^2 / 6`` is returned instead of the quotient.
    """
    return Quaternion(*perp_ratio_arr(f, _one(x))[0])


# -- text form ---------------------------------------------------------------

def parse_spec(text: str) -> AnalyticFunction:
    """Parse ``exp|sin|cos|log|recip|pow:<n>|poly:[q,...]``."""
    text = text.strip()
    if text in ("exp", "sin", "cos", "log", "recip"):
        return named(text)
    head, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"unrecognised function spec {text!r}")
    if head == "pow":
        try:
            return power(int(rest))
        except ValueError:
            raise ValueError(f"bad exponent in {text!r}") from None
    if head == "poly":
        try:
            items = json.loads(rest)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad coefficient list in {text!r}: {exc}") from None
        if not isinstance(items, list):
            raise ValueError(f"poly coefficients must be a list: {text!r}")
        coeffs = []
        for item in items:
            if isinstance(item, bool) or not isinstance(item, (int, float, list)):
                raise ValueError(f"bad coefficient {item!r}")
            if isinstance(item, list) and (len(item) != 4 or
                                           not all(isinstance(v, (int, float)) for v in item)):
                raise ValueError(f"quaternion coefficients need 4 numbers: {item!r}")
            coeffs.append(Quaternion.coerce(item))
        return poly(coeffs)
    raise ValueError(f"unrecognised function spec {text!r}")


def to_spec(f: AnalyticFunction) -> str:
    """Inverse of :func:`parse_spec`; raises ValueError for functions outside the grammar."""
    if f.scale != ONE or f.parts:
        raise ValueError("function has no textual form")
    if f.kind in ("exp", "sin", "cos", "log", "recip"):
        return f.kind
    if f.kind == "pow":
        return f"pow:{f.n}"
    if f.center != 0.0:
        raise ValueError("shifted series have no textual form")
    items = [c.q0 if c.imag_radius() == 0.0 and not _has_neg_zero_imag(c) else c.to_list()
             for c in f.coeffs]
    return "poly:" + json.dumps(items, separators=(",", ":"))


def _has_neg_zero_imag(c: Quaternion) -> bool:
    return any(math.copysign(1.0, v) < 0 for v in (c.q1, c.q2, c.q3))
