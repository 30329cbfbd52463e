"""Seeded verification suites and the report format used by ``quatcalc verify``.

Every suite draws its random inputs from a generator seeded with
``(seed, crc32(suite name))``, so a suite produces the same cases whether it
runs alone or as part of ``all``.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import analytic as af
from . import fueter, integral, oracle, su2
from .differential import commutator_form, d_unit_imaginary, dcal, dcal2, unit_imaginary
from .errors import DegenerateResidual
from .quaternion import I, J, ONE, Quaternion, split

SCHEMA_VERSION = 1

# acceptance tolerances
SLOPE1 = (1.8, 2.2)
SLOPE2 = (2.8, 3.2)
MIN_R2 = 0.99
EXACT_TOL = 1e-12
POWER_ORACLE_TOL = 1e-12
QUADRATURE_TOL = 1e-10
LEIBNITZ_TOL = 1e-11
QUOTIENT_TOL = 1e-10
COMMUTATOR_TOL = 1e-12
BRIDGE_TOL = 1e-5
BOX_EXP_TOL = 1e-6
FUETER_REL_TOL = 1e-4
RATIO_BAND = (1.7, 2.3)
LOOP_FACTOR = 3.0
SYMMETRIC_MATCH_TOL = 1e-10
SU2_SPLIT_TOL = 1e-13
SU2_WORKED_TOL = 1e-13
ROTATION_TOL = 1e-12

TAGS = {
    "first-order": "F(x+d) = F(x) + F'(x) d_par + (F(x)-F(x*))(x-x*)^-1 d_perp + O(d^2)",
    "power": "sum_m x^(n-m-1) d x^m = n x^(n-1) d_par + (x^n - x*^n)(x-x*)^-1 d_perp",
    "lift": "F(x0 + u r) = a + b u where f(x0 + i r) = a + i b",
    "second-order": ("F2 = 1/2 F'' d_par^2 + (F-F*)(x-x*)^-2 (d_perp d_par - d d_perp)"
                     " + F'(x)(x-x*)^-1 d d_perp + F'(x*)(x*-x)^-1 d_perp d_par"),
    "du": "D u_x = d_perp / r",
    "leibnitz": "D(FG) = (DF) G + F (DG)",
    "quotient": "D(G * 1/G) = (DG)(1/G) + G D(1/G) = 0",
    "chain": "D F(G(x)) through the composed lift",
    "commutator": "(F(x)-F(x*))(x-x*)^-1 d_perp = [C, F(x)], C = (x*-x)^-1 d_perp",
    "box": "box = d/dx0 + i d/dx1 + j d/dx2 + k d/dx3; box F = -2 (F-F*)(x-x*)^-1",
    "box-exp": "box e^(px) = -2 e^(p x0) sin(pr)/r",
    "fueter": "laplacian4 box F = 0",
    "line": "int_a^b D F(x) = F(x_b) - F(x_a)",
    "closed": "closed path: int D F = 0",
    "parts": "int F DG = F(b)G(b) - F(a)G(a) - int (DF) G",
    "deriv-int": "D_x int^x D F = D F(x)",
    "symmetric": "1/(n+1) int (dx x^n + x dx x^(n-1) + ... + x^n dx) = x^(n+1)/(n+1)",
    "antiderivative": "int f(t) dt = h(t)  ->  int D h(x) = h(x)",
    "su2": ("F(x+d) = F + F' d_par + (F(x+ir)-F(x-ir))/(2ir) d_perp"
            " + (F(x+ir)+F(x-ir)-2F(x))/(2r) [J3, d_perp]"),
    "su2-split": "d_perp = -[x,[x,d]]/r^2, d_par = d - d_perp",
    "quadrature": "e^(x+d) - e^x = int_0^1 e^((1-s)x) d e^(sx) ds + O(d^2)",
}


def _num(v):
    if isinstance(v, (list, tuple)):
        return [_num(a) for a in v]
    if isinstance(v, Quaternion):
        return v.to_list()
    if isinstance(v, (bool, str)) or v is None:
        return v
    v = float(v)
    return v if math.isfinite(v) else None


@dataclass
class Case:
    name: str
    status: str
    measured: dict
    tolerance: object
    detail: str

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "measured": {k: _num(v) for k, v in sorted(self.measured.items())},
            "tolerance": _num(self.tolerance) if not isinstance(self.tolerance, dict)
            else {k: _num(v) for k, v in sorted(self.tolerance.items())},
            "detail": self.detail,
        }


def case(name: str, ok: bool, measured: dict, tolerance, tag: str, note: str = "") -> Case:
    detail = f"[{TAGS[tag]}]" + (f" {note}" if note else "")
    return Case(name, "pass" if ok else "fail", measured, tolerance, detail)


@dataclass
class Report:
    suite: str
    seed: int
    cases: list = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "skip": 0}
        for c in self.cases:
            counts[c.status] += 1
        counts["total"] = len(self.cases)
        return counts

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_json(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "suite": self.suite,
            "seed": self.seed,
            "summary": self.summary,
            "cases": [c.to_json() for c in sorted(self.cases, key=lambda c: c.name)],
        }


# -- random inputs ------------------------------------------------------------

def rng_for(suite: str, seed: int) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(suite.encode())])


def random_point(rng: np.random.Generator, r_low: float = 0.1, radius: float = 2.0) -> Quaternion:
    """Uniform in the box [-1.2, 1.2]^4 subject to ``r > r_low`` and ``|x| < radius``."""
    while True:
        x = Quaternion(*rng.uniform(-1.2, 1.2, 4))
        if x.imag_radius() > r_low and x.norm() < radius:
            return x


def random_unit(rng: np.random.Generator) -> Quaternion:
    d = Quaternion(*rng.normal(size=4))
    return d / d.norm()


def random_in_ball(rng: np.random.Generator, radius: float) -> Quaternion:
    d = random_unit(rng)
    return d * (radius * rng.uniform() ** 0.25)


def random_left_poly(rng: np.random.Generator, degree: int = 5) -> af.AnalyticFunction:
    return af.poly([Quaternion(*rng.normal(size=4)) for _ in range(degree + 1)])


def random_real_poly(rng: np.random.Generator, degree: int = 4) -> af.AnalyticFunction:
    return af.poly([float(c) for c in rng.normal(size=degree + 1)])


def label(f: af.AnalyticFunction) -> str:
    try:
        return af.to_spec(f)
    except ValueError:
        return f.kind


FIRST_ORDER_FUNCTIONS = [af.power(n) for n in range(9)] + [af.exp(), af.sin(), af.cos()]


# -- suites -----------------------------------------------------------------

def _slope_sweep(f, rng, n_cases, order, band):
    slopes, r2s, exact, worst = [], [], 0, None
    ok = True
    for _ in range(n_cases):
        x, d = random_point(rng), random_unit(rng)
        try:
            rep = oracle.residual_slope(f, x, d, order)
        except DegenerateResidual:
            exact += 1
            continue
        slopes.append(rep.slope)
        r2s.append(rep.r2)
        good = band[0] <= rep.slope <= band[1] and rep.r2 >= MIN_R2
        if not good and worst is None:
            worst = x.to_list() + d.to_list()
        ok &= good
    measured = {"exact_cases": exact,
                "min_slope": min(slopes) if slopes else None,
                "max_slope": max(slopes) if slopes else None,
                "min_r2": min(r2s) if r2s else None}
    if worst is not None:
        measured["first_failure_x_delta"] = worst
    return ok, measured


def suite_first_order(seed: int, cases: int | None = None) -> list:
    rng = rng_for("first-order", seed)
    n = cases or 200
    out = []
    for f in FIRST_ORDER_FUNCTIONS:
        ok, m = _slope_sweep(f, rng, n, 1, SLOPE1)
        out.append(case(f"slope/{label(f)}", ok, m, {"slope": SLOPE1, "min_r2": MIN_R2}, "first-order",
                        f"{n} random (x, d), |d| = 1"))

    # (x + e d)^2 - x^2 - e D x^2 = e^2 d^2 exactly
    fixed = [(Quaternion(1, 1), J)] + [(random_point(rng), random_unit(rng)) for _ in range(n)]
    err = 0.0
    for x, d in fixed:
        rep = oracle.residual_slope(af.power(2), x, d, 1)
        err = max(err, max(abs(res - e * e) for e, res in zip(rep.epsilons, rep.residuals)))
    out.append(case("exact/pow:2", err <= EXACT_TOL, {"max_abs_error": err}, EXACT_TOL, "first-order",
                    "order-1 residual of x^2 equals eps^2 |d|^2"))

    for k in range(1, 9):
        err = 0.0
        for _ in range(max(1, n // 2)):
            x, d = random_point(rng), random_unit(rng)
            diff = dcal(af.power(k), x, d) - oracle.direct_power_first_order(k, x, d)
            err = max(err, diff.norm())
        out.append(case(f"power-oracle/pow:{k}", err <= POWER_ORACLE_TOL, {"max_abs_error": err},
                        POWER_ORACLE_TOL, "power", "direct sum over placements of d"))

    ok_all, slopes = True, []
    for _ in range(max(1, n // 4)):
        f = random_left_poly(rng)
        ok, m = _slope_sweep(f, rng, 4, 1, SLOPE1)
        ok_all &= ok
        slopes += [m["min_slope"], m["max_slope"]]
    out.append(case("slope/left-coefficient-poly", ok_all,
                    {"min_slope": min(slopes), "max_slope": max(slopes)},
                    {"slope": SLOPE1}, "first-order", "random quaternion coefficients on the left"))

    for name in ("exp", "sin", "cos"):
        coeffs = oracle.taylor_coefficients(name, 60)
        f = af.named(name)
        err = 0.0
        for _ in range(max(1, n // 4)):
            x = random_point(rng)
            err = max(err, (af.evaluate(f, x) - oracle.power_series_sum(coeffs, x)).norm())
        out.append(case(f"lift/{name}", err <= 1e-10, {"max_abs_error": err}, 1e-10, "lift",
                        "60-term quaternion Maclaurin sum"))
    return out


def suite_second_order(seed: int, cases: int | None = None) -> list:
    rng = rng_for("second-order", seed)
    n = cases or 100
    out = []
    funcs = [af.power(k) for k in range(3, 9)] + [af.exp(), af.sin(), af.cos(), af.log(), af.recip()]
    for f in funcs:
        ok, m = _slope_sweep(f, rng, n, 2, SLOPE2)
        out.append(case(f"slope/{label(f)}", ok, m, {"slope": SLOPE2, "min_r2": MIN_R2}, "second-order",
                        f"{n} random (x, d), |d| = 1"))

    v1 = dcal2(af.power(2), Quaternion(1, 1), J)
    v2 = dcal2(af.power(3), I, J)
    e1 = (v1 - Quaternion(-1)).norm()
    e2 = (v2 + I).norm()
    out.append(case("worked/pow:2-at-1+i-along-j", e1 <= EXACT_TOL, {"value": v1, "abs_error": e1},
                    EXACT_TOL, "second-order", "expected -1"))
    out.append(case("worked/pow:3-at-i-along-j", e2 <= EXACT_TOL, {"value": v2, "abs_error": e2},
                    EXACT_TOL, "second-order", "expected -i"))

    for k in range(2, 9):
        err = 0.0
        for _ in range(max(1, n // 4)):
            x, d = random_point(rng), random_unit(rng)
            diff = dcal2(af.power(k), x, d) - oracle.direct_power_second_order(k, x, d)
            err = max(err, diff.norm())
        tol = EXACT_TOL * 10 ** (k / 2)
        out.append(case(f"power-oracle/pow:{k}", err <= tol, {"max_abs_error": err}, tol, "second-order",
                        "sum over placements of two d factors"))

    slopes, ok = [], True
    for _ in range(n):
        x, d = random_point(rng), random_unit(rng)
        rep = oracle.finite_difference_slope(unit_imaginary, x, d, d_unit_imaginary(x, d))
        slopes.append(rep.slope)
        ok &= SLOPE1[0] <= rep.slope <= SLOPE1[1] and rep.r2 >= MIN_R2
    out.append(case("unit-imaginary/finite-difference", ok,
                    {"min_slope": min(slopes), "max_slope": max(slopes)}, {"slope": SLOPE1}, "du",
                    "u(x + e d) - u(x) - e d_perp/r"))
    return out


def _leibnitz_pairs(rng):
    base = [af.exp(), af.sin(), af.cos(), af.power(2), af.power(3), af.log()]
    pairs = [(a, b) for a in base for b in base]
    pairs.append((random_real_poly(rng), random_real_poly(rng)))
    return pairs


def suite_leibnitz(seed: int, cases: int | None = None) -> list:
    rng = rng_for("leibnitz", seed)
    n = cases or 200
    pairs = _leibnitz_pairs(rng)
    err = 0.0
    for i in range(n):
        f, g = pairs[i % len(pairs)]
        x, d = random_point(rng), random_unit(rng)
        lhs = dcal(af.product(f, g), x, d)
        rhs = dcal(f, x, d) * af.evaluate(g, x) + af.evaluate(f, x) * dcal(g, x, d)
        err = max(err, (lhs - rhs).norm())
    out = [case("product-rule", err <= LEIBNITZ_TOL, {"max_abs_error": err}, LEIBNITZ_TOL, "leibnitz",
                f"{n} random (F, G, x, d)")]

    denominators = [af.exp(), af.add(af.cos(), af.const(3.0)), af.add(af.power(2), af.const(2.0)),
                    af.add(random_real_poly(rng, 2), af.const(5.0))]
    err, used = 0.0, 0
    while used < n:
        g = denominators[used % len(denominators)]
        x, d = random_point(rng), random_unit(rng)
        gx = af.evaluate(g, x)
        if gx.norm() < 0.1:
            continue
        used += 1
        rg = af.compose(af.recip(), g)
        total = dcal(g, x, d) * af.evaluate(rg, x) + gx * dcal(rg, x, d)
        err = max(err, total.norm())
    out.append(case("quotient-rule", err <= QUOTIENT_TOL, {"max_abs_error": err}, QUOTIENT_TOL,
                    "quotient", f"{n} random points with |G(x)| >= 0.1"))

    slopes, ok = [], True
    for k in range(max(1, n // 10)):
        f, g = pairs[(7 * k) % len(pairs)]
        m_ok, m = _slope_sweep(af.compose(f, g), rng, 1, 1, SLOPE1)
        ok &= m_ok
        if m["min_slope"] is not None:
            slopes.append(m["min_slope"])
    out.append(case("chain-rule/composed-lift", ok, {"min_slope": min(slopes), "max_slope": max(slopes)},
                    {"slope": SLOPE1}, "chain", "first-order residual of F(G(x))"))
    return out


def suite_commutator(seed: int, cases: int | None = None) -> list:
    rng = rng_for("commutator", seed)
    n = cases or 200
    funcs = [af.exp(), af.sin(), af.cos(), af.log(), af.recip()] + [af.power(k) for k in range(9)]
    err = 0.0
    for i in range(n):
        f = funcs[i % len(funcs)] if i % 5 else random_real_poly(rng)
        x, d = random_point(rng), random_unit(rng)
        par = split(x, d).parallel
        perp_term = dcal(f, x, d) - af.eval_derivative(f, x) * par
        err = max(err, (commutator_form(f, x, d) - perp_term).norm())
    return [case("commutator-equivalence", err <= COMMUTATOR_TOL, {"max_abs_error": err}, COMMUTATOR_TOL,
                 "commutator", f"{n} random real-coefficient cases")]


def suite_fueter(seed: int, cases: int | None = None) -> list:
    rng = rng_for("fueter", seed)
    n = cases or 100
    out = []
    x = Quaternion(0, math.pi / 2)
    ba = fueter.box_analytic(af.exp(), x)
    bn = fueter.box_numeric(af.exp(), x, fueter.StencilConfig(1e-4, 2))
    want = -4 / math.pi
    err = max((ba - want).norm(), (bn - want).norm())
    out.append(case("box-exp/x=(pi/2)i", err <= BOX_EXP_TOL,
                    {"analytic": ba, "numeric": bn, "expected": want, "max_abs_error": err},
                    BOX_EXP_TOL, "box-exp", "p = 1, x0 = 0, r = pi/2"))

    bx = fueter.box_numeric(af.power(1), random_point(rng))
    out.append(case("box-identity/x", (bx + 2).norm() <= 1e-9, {"value": bx}, 1e-9, "box",
                    "box x = 1 + i i + j j + k k = -2"))

    funcs = [af.power(k) for k in range(1, 7)] + [af.exp(), af.sin()]
    cfg1 = fueter.StencilConfig(1e-4, 2)
    cfg2 = fueter.StencilConfig(1e-3, 2)
    for f in funcs:
        bridge, reg, imag = 0.0, 0.0, 0.0
        for _ in range(n):
            x = random_point(rng, r_low=0.2)
            a = fueter.box_analytic(f, x)
            bridge = max(bridge, (fueter.box_numeric(f, x, cfg1) - a).norm())
            imag = max(imag, a.imag_radius())
            lap = fueter.laplacian4(lambda y: fueter.box_analytic(f, y), x, cfg2)
            reg = max(reg, lap.norm() / (1.0 + local_size(f, x)))
        name = label(f)
        out.append(case(f"bridge/{name}", bridge <= BRIDGE_TOL, {"max_abs_error": bridge}, BRIDGE_TOL,
                        "box", f"{n} points, r > 0.2, h = 1e-4"))
        out.append(case(f"regularity/{name}", reg <= FUETER_REL_TOL, {"max_relative": reg},
                        FUETER_REL_TOL, "fueter", "h = 1e-3, analytic box inside"))
        out.append(case(f"real-box/{name}", imag <= 1e-12, {"max_imag": imag}, 1e-12, "box"))
    return out


def local_size(f: af.AnalyticFunction, x: Quaternion) -> float:
    """``max_k |F^(k)(x)|`` for ``k <= 3``: the scale the regularity residual is measured against."""
    sizes = [af.evaluate(f, x).norm()]
    sizes += [af.eval_derivative(f, x, k).norm() for k in (1, 2, 3)]
    return max(sizes)


def loop_check(f: af.AnalyticFunction, waypoints, n: int):
    """Closed-loop value against the larger open-path error of its two pieces.

    The loop is cut before its final waypoint into an open prefix and the
    final leg.  Also returns ``|loop(n)| / |loop(2n)|`` (None when the loop
    value is at rounding level).
    """
    loop = integral.Path(waypoints, n)
    pieces = (integral.Path(waypoints[:-1], n), integral.Path(waypoints[-2:], n))
    e_open = max((integral.line_integral_D(f, p) - integral.endpoint_difference(f, p)).norm()
                 for p in pieces)
    val = integral.line_integral_D(f, loop).norm()
    val2 = integral.line_integral_D(f, loop.refined(2 * n)).norm()
    ratio = val / val2 if val > 1e-12 else None
    return val, e_open, ratio


def _x1_point(rng):
    """Point with ``x1 >= 0.3`` so every convex combination keeps ``r >= 0.3``."""
    return Quaternion(rng.uniform(-1, 1), rng.uniform(0.3, 1.0), rng.uniform(-1, 1), rng.uniform(-1, 1))


INTEGRAL_FUNCTIONS = [af.power(2), af.power(3), af.power(4), af.exp(), af.sin()]
CONVERGENCE_N = (250, 500, 1000, 2000)


def convergence_errors(value_fn: Callable[[int], Quaternion], exact: Quaternion, ns=CONVERGENCE_N):
    errs = [(value_fn(k) - exact).norm() for k in ns]
    ratios = [a / b for a, b in zip(errs, errs[1:])]
    return errs, ratios


def suite_integral(seed: int, cases: int | None = None) -> list:
    rng = rng_for("integral", seed)
    n = cases or 3
    out = []
    paths = [integral.Path((Quaternion(1, 0.5), Quaternion(0.3, 0.2, 1.2, 0.4), Quaternion(-0.5, 1, 0, 1)), 1)]
    paths += [integral.Path((_x1_point(rng), _x1_point(rng), _x1_point(rng)), 1) for _ in range(n)]
    for f in INTEGRAL_FUNCTIONS:
        worst_lo, worst_hi = math.inf, -math.inf
        for p in paths:
            exact = integral.endpoint_difference(f, p)
            _, ratios = convergence_errors(lambda k: integral.line_integral_D(f, p.refined(k)), exact)
            worst_lo, worst_hi = min(worst_lo, *ratios), max(worst_hi, *ratios)
        ok = RATIO_BAND[0] <= worst_lo and worst_hi <= RATIO_BAND[1]
        out.append(case(f"convergence/{label(f)}", ok, {"min_ratio": worst_lo, "max_ratio": worst_hi},
                        {"ratio": RATIO_BAND}, "line", "error(N)/error(2N) for N = 250..2000"))

    N = 2000
    for f in INTEGRAL_FUNCTIONS:
        ok, gap_max = True, 0.0
        for _ in range(n + 1):
            a, b = _x1_point(rng), _x1_point(rng)
            p1 = integral.Path((a, _x1_point(rng), b), N)
            p2 = integral.Path((a, _x1_point(rng), _x1_point(rng), b), N)
            exact = integral.endpoint_difference(f, p1)
            v1, v2 = integral.line_integral_D(f, p1), integral.line_integral_D(f, p2)
            allowed = (v1 - exact).norm() + (v2 - exact).norm()
            gap = (v1 - v2).norm()
            gap_max = max(gap_max, gap)
            ok &= gap <= allowed
        out.append(case(f"path-independence/{label(f)}", ok, {"max_gap": gap_max},
                        "sum of the two convergence errors", "line", f"N = {N} per leg"))

    loops = [(I, Quaternion(1, 1), Quaternion(1, 2), Quaternion(0, 2), I)]
    for _ in range(n):
        a = _x1_point(rng)
        loops.append((a, _x1_point(rng), _x1_point(rng), a))
    for f in INTEGRAL_FUNCTIONS + [af.cos(), af.log()]:
        ok, worst, slow = True, 0.0, math.inf
        for wp in loops:
            val, e_open, ratio = loop_check(f, wp, N)
            worst = max(worst, val / max(e_open, 1e-300))
            ok &= val <= LOOP_FACTOR * e_open + 1e-14
            if ratio is not None:
                slow = min(slow, ratio)
                ok &= ratio >= RATIO_BAND[0]
        out.append(case(f"closed-loop/{label(f)}", ok,
                        {"max_value_over_open_error": worst, "min_halving_ratio": slow},
                        {"factor": LOOP_FACTOR, "min_ratio": RATIO_BAND[0]}, "closed",
                        "open error = max over the prefix and the final leg"))

    real_coeff = [af.power(1), af.exp(), af.sin(), af.power(2), af.cos()]
    ok, worst = True, 0.0
    for i in range(len(real_coeff)):
        f, g = real_coeff[i], real_coeff[(i + 2) % len(real_coeff)]
        p = integral.Path((_x1_point(rng), _x1_point(rng)), N)
        lhs, rhs = integral.line_integral_parts(f, g, p)
        lhs2, rhs2 = integral.line_integral_parts(f, g, p.refined(2 * N))
        allowed = 2.0 * ((lhs - lhs2).norm() + (rhs - rhs2).norm())
        gap = (lhs - rhs).norm()
        worst = max(worst, gap / allowed)
        ok &= gap <= allowed
    out.append(case("integration-by-parts", ok, {"max_gap_over_allowed": worst},
                    "2 (|lhs_N - lhs_2N| + |rhs_N - rhs_2N|)", "parts", f"N = {N}"))

    eps, big_n = 1e-3, 10_000
    worst = 0.0
    ok = True
    for f in INTEGRAL_FUNCTIONS:
        a, x, d = _x1_point(rng), _x1_point(rng), random_unit(rng)
        short = integral.Path((a, x), big_n)
        long = integral.Path((a, x, x + d * eps), big_n)
        diff = integral.line_integral_D(f, long) - integral.line_integral_D(f, short)
        scale = 1.0 + af.eval_derivative(f, x, 2).norm() + af.eval_derivative(f, x, 1).norm()
        gap = (diff - dcal(f, x, d) * eps).norm()
        tol = 10 * eps ** 2 * scale
        worst = max(worst, gap / tol)
        ok &= gap <= tol
    out.append(case("derivative-of-integral", ok, {"max_gap_over_tol": worst},
                    "10 eps^2 (1 + |F'| + |F''|)", "deriv-int", f"eps = {eps}, N = {big_n}"))

    p = integral.Path((0.0, 1.0), 1000)
    starts, deltas = p.increments()
    riemann = math.fsum(math.exp(t) * h for t, h in zip(starts[:, 0], deltas[:, 0]))
    val = integral.line_integral_D(af.exp(), p)
    gap = abs(val.q0 - riemann) + val.imag_radius()
    out.append(case("real-axis/exp", gap <= 1e-12,
                    {"value": val, "riemann_sum": riemann, "hits": integral.real_axis_hits(p)},
                    1e-12, "line", "reduces to the ordinary left Riemann sum of e^t"))
    return out


def suite_symmetric(seed: int, cases: int | None = None) -> list:
    rng = rng_for("symmetric-integral", seed)
    n = cases or 2
    out = []
    # 1 -> i is avoided for rates: b^n - a^n vanishes there for n = 4, making the sum O(1/N^2)
    paths = [integral.Path((0.0, Quaternion(1, 1, 1, 1)), 1)]
    paths += [integral.Path((random_point(rng), random_point(rng), random_point(rng)), 1) for _ in range(n)]
    for power in range(6):
        lo, hi, match = math.inf, -math.inf, 0.0
        exact_err = 0.0
        for p in paths:
            exact = integral.symmetric_closed_form(power, p)
            if power == 0:
                exact_err = max(exact_err, (integral.symmetric_integral(0, p.refined(1000)) - exact).norm())
            else:
                _, ratios = convergence_errors(lambda k: integral.symmetric_integral(power, p.refined(k)), exact)
                lo, hi = min(lo, *ratios), max(hi, *ratios)
            q = p.refined(500)
            anti = af.power(power + 1, scale=1.0 / (power + 1))
            diff = integral.symmetric_integral(power, q) - integral.line_integral_D(anti, q)
            match = max(match, diff.norm())
        if power == 0:
            out.append(case("convergence/n=0", exact_err <= 1e-14, {"max_abs_error": exact_err}, 1e-14,
                            "symmetric", "telescopes to b - a"))
        else:
            ok = RATIO_BAND[0] <= lo and hi <= RATIO_BAND[1]
            out.append(case(f"convergence/n={power}", ok, {"min_ratio": lo, "max_ratio": hi},
                            {"ratio": RATIO_BAND}, "symmetric", "error(N)/error(2N) for N = 250..2000"))
        out.append(case(f"matches-antiderivative/n={power}", match <= SYMMETRIC_MATCH_TOL,
                        {"max_abs_error": match}, SYMMETRIC_MATCH_TOL, "antiderivative",
                        "same refinement, D of x^(n+1)/(n+1)"))

    for power, p, want in ((1, integral.Path((0.0, Quaternion(1, 1, 1, 1)), 10_000), Quaternion(-1, 1, 1, 1)),
                           (2, integral.Path((ONE, I), 10_000), Quaternion(-1, -1) / 3)):
        val = integral.symmetric_integral(power, p)
        err = (val - want).norm()
        out.append(case(f"closed-form/n={power}", err <= 1e-3, {"value": val, "abs_error": err}, 1e-3,
                        "symmetric", "N = 10000"))

    p = integral.Path((0.0, Quaternion(0, math.pi / 2)), 10_000)
    val = integral.antiderivative_rule(af.cos(), af.sin(), p)
    want = Quaternion(0, math.sinh(math.pi / 2))
    err = (val - want).norm()
    out.append(case("antiderivative/cos", err <= 1e-3, {"value": val, "abs_error": err}, 1e-3,
                    "antiderivative", "h = sin along 0 -> (pi/2) i"))
    return out


def _su2_random(rng, r_low=0.2):
    while True:
        c = rng.uniform(-1, 1, 4)
        if np.linalg.norm(c[1:]) > r_low:
            return su2.Su2Element(tuple(c))


def _su2_unit(rng):
    c = rng.normal(size=4)
    return su2.Su2Element(tuple(c / np.linalg.norm(c)))


def su2_residuals(f, x, d, eps=oracle.DEFAULT_EPSILONS, g=None):
    """Oracle residuals of the first-order term; ``g`` conjugates x and d first."""
    if g is not None:
        gi = np.linalg.inv(g)
        x = su2.Su2Element.from_matrix(g @ x.matrix @ gi)
        d = su2.Su2Element.from_matrix(g @ d.matrix @ gi)
    xm, dm = x.matrix, d.matrix
    first = su2.su2_first_order(f, x, d)
    base = su2.matrix_function_oracle(f, xm)
    return [float(np.linalg.norm(su2.matrix_function_oracle(f, xm + e * dm) - base - e * first))
            for e in eps]


def suite_su2(seed: int, cases: int | None = None) -> list:
    rng = rng_for("su2", seed)
    n = cases or 100
    out = []
    funcs = [af.power(k) for k in range(2, 6)] + [af.exp()]
    slopes, ok = [], True
    for i in range(n):
        f = funcs[i % len(funcs)]
        rep = oracle.fit_slope(oracle.DEFAULT_EPSILONS, su2_residuals(f, _su2_random(rng), _su2_unit(rng)))
        slopes.append(rep.slope)
        ok &= SLOPE1[0] <= rep.slope <= SLOPE1[1] and rep.r2 >= MIN_R2
    out.append(case("slope", ok, {"min_slope": min(slopes), "max_slope": max(slopes)}, {"slope": SLOPE1},
                    "su2", f"{n} random (x, d) against the 2x2 matrix-function oracle"))

    err = 0.0
    for _ in range(n):
        x, d = _su2_random(rng, 1e-3), _su2_unit(rng)
        par, perp = su2.su2_split(x, d)
        axis = np.array(x.coeffs[1:]) / x.r
        v = np.array(d.coeffs[1:])
        along = axis * (axis @ v)
        par_ref = np.concatenate([[d.coeffs[0]], along])
        perp_ref = np.concatenate([[0.0], v - along])
        rot = su2.commutator(x.matrix, d.matrix) / x.r
        twice = -su2.commutator(x.matrix, rot) / x.r
        err = max(err, np.max(np.abs(np.array(par.coeffs) - par_ref)),
                  np.max(np.abs(np.array(perp.coeffs) - perp_ref)),
                  np.max(np.abs(twice - perp.matrix)),
                  np.max(np.abs((par + perp).matrix - d.matrix)))
    out.append(case("split-identity", err <= SU2_SPLIT_TOL, {"max_abs_error": err}, SU2_SPLIT_TOL,
                    "su2-split", "against Euclidean projection onto the axis of x"))

    worked = su2.su2_first_order(af.power(2), su2.Su2Element((1, 0, 0, 1)), su2.Su2Element((0, 1, 0, 0)))
    err = float(np.max(np.abs(worked - 2 * su2.J1)))
    out.append(case("worked/pow:2-at-I+J3-along-J1", err <= SU2_WORKED_TOL, {"max_abs_error": err},
                    SU2_WORKED_TOL, "su2", "expected 2 J1"))

    err = 0.0
    for i in range(max(1, n // 5)):
        f = funcs[i % len(funcs)]
        x, d = _su2_random(rng), _su2_unit(rng)
        g = su2.group_element(rng.normal(size=3), rng.uniform(0, 2 * math.pi))
        r0 = su2_residuals(f, x, d)
        r1 = su2_residuals(f, x, d, g=g)
        err = max(err, max(abs(a - b) for a, b in zip(r0, r1)))
    out.append(case("rotation-invariance", err <= ROTATION_TOL, {"max_abs_change": err}, ROTATION_TOL,
                    "su2", "x, d conjugated by a common SU(2) element"))
    return out


def suite_exp_quadrature(seed: int, cases: int | None = None) -> list:
    rng = rng_for("exp-quadrature", seed)
    n = cases or 50
    err, mono = 0.0, True
    for _ in range(n):
        x, d = random_in_ball(rng, 3.0), random_unit(rng)
        closed = dcal(af.exp(), x, d)
        err = max(err, (oracle.exp_expansion_quadrature(x, d, 64) - closed).norm())
        prev = math.inf
        for nodes in (8, 16, 32, 64):
            e = (oracle.exp_expansion_quadrature(x, d, nodes) - closed).norm()
            if prev > 1e-13:
                mono &= e < prev or e <= 1e-13
            prev = e
    return [
        case("quadrature-64", err <= QUADRATURE_TOL, {"max_abs_error": err}, QUADRATURE_TOL, "quadrature",
             f"{n} random (x, d), |x| <= 3"),
        case("node-doubling", mono, {"monotone": mono}, "decreasing until 1e-13", "quadrature",
             "8, 16, 32, 64 nodes"),
    ]


SUITES = {
    "first-order": suite_first_order,
    "second-order": suite_second_order,
    "leibnitz": suite_leibnitz,
    "commutator": suite_commutator,
    "fueter": suite_fueter,
    "integral": suite_integral,
    "symmetric-integral": suite_symmetric,
    "su2": suite_su2,
    "exp-quadrature": suite_exp_quadrature,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, seed: int = 0, cases: int | None = None) -> Report:
    if name not in SUITE_NAMES:
        raise KeyError(name)
    report = Report(name, seed)
    names = list(SUITES) if name == "all" else [name]
    for suite in names:
        for c in SUITES[suite](seed, cases):
            if name == "all":
                c.name = f"{suite}/{c.name}"
            report.cases.append(c)
    return report
