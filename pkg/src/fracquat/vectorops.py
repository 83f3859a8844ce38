"""Local fractional gradient, divergence and curl per coordinate frame.

Each operator is encoded directly as its expanded per-frame component
formulas (not derived by differentiating frame vectors); the derivative
engine then proves curl(grad) = 0, div(curl) = 0 and the Laplacian and
Bitsadze factorizations on top of them, which guards against
transcription slips.
"""

from __future__ import annotations

from .canonical import CanonicalExpr, as_canonical_scalar
from .derivative import d_alpha
from .frames import Frame, QuaternionField, vector_field

_INV_R = CanonicalExpr.fractal_power("r", -1)
_INV_SIN = CanonicalExpr.trig("theta", "sin").inverse()
_COS = CanonicalExpr.trig("theta", "cos")


def grad_alpha(f0, frame: Frame) -> QuaternionField:
    """Gradient of a scalar, as a pure vector field."""
    f0 = as_canonical_scalar(f0)
    v1, v2, v3 = frame.variables
    if frame.name == "cartesian":
        return vector_field(frame, d_alpha(f0, v1), d_alpha(f0, v2), d_alpha(f0, v3))
    if frame.name == "cylindrical":
        return vector_field(
            frame, d_alpha(f0, "r"), _INV_R * d_alpha(f0, "theta"), d_alpha(f0, "z")
        )
    if frame.name == "spherical":
        return vector_field(
            frame,
            d_alpha(f0, "r"),
            _INV_R * d_alpha(f0, "theta"),
            _INV_R * _INV_SIN * d_alpha(f0, "psi"),
        )
    raise ValueError(f"unknown frame {frame.name!r}")


def div_alpha(v: QuaternionField) -> CanonicalExpr:
    """Divergence of the vector part."""
    frame = v.frame
    f1, f2, f3 = v.vector_components
    if frame.name == "cartesian":
        return d_alpha(f1, "x") + d_alpha(f2, "y") + d_alpha(f3, "z")
    if frame.name == "cylindrical":
        return d_alpha(f1, "r") + _INV_R * d_alpha(f2, "theta") + _INV_R * f1 + d_alpha(f3, "z")
    if frame.name == "spherical":
        return (
            d_alpha(f1, "r")
            + 2 * _INV_R * f1
            + _INV_R * d_alpha(f2, "theta")
            + _INV_R * _INV_SIN * (d_alpha(f3, "psi") + _COS * f2)
        )
    raise ValueError(f"unknown frame {frame.name!r}")


def curl_alpha(v: QuaternionField) -> QuaternionField:
    """Curl of the vector part, as a pure vector field."""
    frame = v.frame
    f1, f2, f3 = v.vector_components
    if frame.name == "cartesian":
        return vector_field(
            frame,
            d_alpha(f3, "y") - d_alpha(f2, "z"),
            d_alpha(f1, "z") - d_alpha(f3, "x"),
            d_alpha(f2, "x") - d_alpha(f1, "y"),
        )
    if frame.name == "cylindrical":
        return vector_field(
            frame,
            _INV_R * d_alpha(f3, "theta") - d_alpha(f2, "z"),
            d_alpha(f1, "z") - d_alpha(f3, "r"),
            d_alpha(f2, "r") - _INV_R * d_alpha(f1, "theta") + _INV_R * f2,
        )
    if frame.name == "spherical":
        return vector_field(
            frame,
            _INV_R * d_alpha(f3, "theta")
            - _INV_R * _INV_SIN * d_alpha(f2, "psi")
            + _INV_R * _INV_SIN * _COS * f3,
            _INV_R * _INV_SIN * d_alpha(f1, "psi") - d_alpha(f3, "r") - _INV_R * f3,
            d_alpha(f2, "r") - _INV_R * d_alpha(f1, "theta") + _INV_R * f2,
        )
    raise ValueError(f"unknown frame {frame.name!r}")
