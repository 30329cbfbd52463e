"""Quaternion differential and integral calculus with brute-force cross-checks."""

from .analytic import AnalyticFunction, derivative, evaluate, parse_spec, perp_ratio, to_spec
from .differential import commutator_form, d_unit_imaginary, dcal, dcal2, differential
from .errors import (AntiderivativeMismatch, DegenerateResidual, DomainError, PureRealInput,
                     PureScalarInput, QuatCalcError)
from .fueter import StencilConfig, box_analytic, box_numeric, laplacian4
from .integral import Path, line_integral_D, line_integral_parts, symmetric_integral
from .oracle import SlopeReport, residual_slope
from .quaternion import I, J, K, ONE, ZERO, PolarForm, Quaternion, TangentSplit, polar, split
from .su2 import Su2Element, su2_first_order, su2_split

__version__ = "0.1.0"

__all__ = [
    "AnalyticFunction", "derivative", "evaluate", "parse_spec", "perp_ratio", "to_spec",
    "commutator_form", "d_unit_imaginary", "dcal", "dcal2", "differential",
    "AntiderivativeMismatch", "DegenerateResidual", "DomainError", "PureRealInput",
    "PureScalarInput", "QuatCalcError",
    "StencilConfig", "box_analytic", "box_numeric", "laplacian4",
    "Path", "line_integral_D", "line_integral_parts", "symmetric_integral",
    "SlopeReport", "residual_slope",
    "I", "J", "K", "ONE", "ZERO", "PolarForm", "Quaternion", "TangentSplit", "polar", "split",
    "Su2Element", "su2_first_order", "su2_split",
]
