"""Quaternionic first- and second-order operators and the identity engine.

The first-order operator (left action) is

    D[f] = -div(fvec) + grad(f0) + curl(fvec),

its right action flips the curl sign (the unique choice that makes the
Bitsadze factorization close in the curvilinear frames; the Cartesian
right action reduces to multiplying the units from the right).  The
second-order operators are encoded as expanded per-frame component
formulas rather than compositions, so verifying

    D(D f)        = -(scalar Laplacian + vector Laplacian)
    D(D^r f)      = -(scalar Laplacian + Bitsadze vector part)
    -(D-lam)(D+lam) f = Laplacian f + lam^2 f

is a genuine mechanical check of the expanded formulas against the
compositional definitions, with all four residuals required to
normalize to zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import CanonicalExpr, as_canonical_scalar, render_canonical
from .coefficients import Poly, as_poly
from .derivative import DerivativeMode, d_alpha
from .frames import (
    Frame,
    QuaternionField,
    abstract_field,
    abstract_scalar_field,
    abstract_vector_field,
    frame_by_name,
)
from .vectorops import curl_alpha, div_alpha, grad_alpha

_INV_R = CanonicalExpr.fractal_power("r", -1)
_INV_R2 = CanonicalExpr.fractal_power("r", -2)
_INV_SIN = CanonicalExpr.trig("theta", "sin").inverse()
_INV_SIN2 = _INV_SIN * _INV_SIN
_COS = CanonicalExpr.trig("theta", "cos")

FORMAL = "formal"


def _lam_poly(lam) -> Poly:
    if lam is None or lam == FORMAL:
        return Poly.lam()
    if isinstance(lam, Poly):
        return lam
    return as_poly(lam)


def mt_apply(f: QuaternionField, side: str = "left") -> QuaternionField:
    """First-order operator: -div + grad + curl (left) or -div + grad - curl
    (right action)."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    g = grad_alpha(f.f0, f.frame)
    c = curl_alpha(f)
    if side == "right":
        c = -c
    return QuaternionField(
        f.frame, -div_alpha(f), g.f1 + c.f1, g.f2 + c.f2, g.f3 + c.f3
    )


def delta0(f0, frame: Frame) -> CanonicalExpr:
    """Scalar Laplacian, expanded per frame."""
    f0 = as_canonical_scalar(f0)

    def d(g, v):
        return d_alpha(g, v)

    def d2(g, v, w=None):
        return d_alpha(d_alpha(g, v), w or v)

    if frame.name == "cartesian":
        return d2(f0, "x") + d2(f0, "y") + d2(f0, "z")
    if frame.name == "cylindrical":
        return d2(f0, "r") + _INV_R2 * d2(f0, "theta") + _INV_R * d(f0, "r") + d2(f0, "z")
    if frame.name == "spherical":
        return (
            d2(f0, "r")
            + 2 * _INV_R * d(f0, "r")
            + _INV_R2 * d2(f0, "theta")
            + _INV_R2 * _COS * _INV_SIN * d(f0, "theta")
            + _INV_R2 * _INV_SIN2 * d2(f0, "psi")
        )
    raise ValueError(f"unknown frame {frame.name!r}")


def _vector_laplacian(f: QuaternionField) -> tuple:
    """Expanded components of grad(div) - curl(curl) for the frame."""
    frame = f.frame
    f1, f2, f3 = f.vector_components

    def d(g, v):
        return d_alpha(g, v)

    if frame.name == "cartesian":
        # the Laplacian acts separately on every coordinate function
        return tuple(delta0(g, frame) for g in (f1, f2, f3))
    if frame.name == "cylindrical":
        return (
            delta0(f1, frame) - _INV_R2 * f1 - 2 * _INV_R2 * d(f2, "theta"),
            delta0(f2, frame) - _INV_R2 * f2 + 2 * _INV_R2 * d(f1, "theta"),
            delta0(f3, frame),
        )
    if frame.name == "spherical":
        return (
            delta0(f1, frame)
            - 2 * _INV_R2 * f1
            - 2 * _INV_R2 * d(f2, "theta")
            - 2 * _INV_R2 * _COS * _INV_SIN * f2
            - 2 * _INV_R2 * _INV_SIN * d(f3, "psi"),
            delta0(f2, frame)
            - _INV_R2 * _INV_SIN2 * f2
            + 2 * _INV_R2 * d(f1, "theta")
            - 2 * _INV_R2 * _COS * _INV_SIN2 * d(f3, "psi"),
            delta0(f3, frame)
            - _INV_R2 * _INV_SIN2 * f3
            + 2 * _INV_R2 * _INV_SIN * d(f1, "psi")
            + 2 * _INV_R2 * _COS * _INV_SIN2 * d(f2, "psi"),
        )
    raise ValueError(f"unknown frame {frame.name!r}")


def laplacian(f: QuaternionField) -> QuaternionField:
    """Quaternionic Laplacian: scalar Laplacian on f0 plus the expanded
    vector Laplacian on the vector part."""
    return QuaternionField(f.frame, delta0(f.f0, f.frame), *_vector_laplacian(f))


def _bitsadze_vector(f: QuaternionField) -> tuple:
    """Expanded components of grad(div) + curl(curl) for the frame."""
    frame = f.frame
    f1, f2, f3 = f.vector_components

    def d(g, v):
        return d_alpha(g, v)

    def d2(g, v, w=None):
        return d_alpha(d_alpha(g, v), w or v)

    if frame.name == "cartesian":
        # no expanded form carried for this frame: compose the operators
        gd = grad_alpha(div_alpha(f), frame)
        cc = curl_alpha(curl_alpha(f))
        return (gd.f1 + cc.f1, gd.f2 + cc.f2, gd.f3 + cc.f3)
    if frame.name == "cylindrical":
        return (
            d2(f1, "r")
            + 2 * _INV_R * d2(f2, "r", "theta")
            + _INV_R * d(f1, "r")
            - _INV_R2 * f1
            + 2 * d2(f3, "r", "z")
            - _INV_R2 * d2(f1, "theta")
            - d2(f1, "z"),
            2 * _INV_R * d2(f1, "r", "theta")
            + _INV_R2 * d2(f2, "theta")
            + 2 * _INV_R * d2(f3, "theta", "z")
            - d2(f2, "z")
            - d2(f2, "r")
            - _INV_R * d(f2, "r")
            + _INV_R2 * f2,
            2 * d2(f1, "r", "z")
            + 2 * _INV_R * d2(f2, "theta", "z")
            + 2 * _INV_R * d(f1, "z")
            + d2(f3, "z")
            - d2(f3, "r")
            - _INV_R2 * d2(f3, "theta")
            - _INV_R * d(f3, "r"),
        )
    if frame.name == "spherical":
        return (
            d2(f1, "r")
            + 2 * _INV_R * d(f1, "r")
            - 2 * _INV_R2 * f1
            - _INV_R2 * d2(f1, "theta")
            - _INV_R2 * _COS * _INV_SIN * d(f1, "theta")
            - _INV_R2 * _INV_SIN2 * d2(f1, "psi")
            + 2 * _INV_R * d2(f2, "r", "theta")
            + 2 * _INV_R * _COS * _INV_SIN * d(f2, "r")
            + 2 * _INV_R * _INV_SIN * d2(f3, "r", "psi"),
            -d2(f2, "r")
            - 2 * _INV_R * d(f2, "r")
            - _INV_R2 * _INV_SIN2 * f2
            + _INV_R2 * d2(f2, "theta")
            + _INV_R2 * _COS * _INV_SIN * d(f2, "theta")
            - _INV_R2 * _INV_SIN2 * d2(f2, "psi")
            + 2 * _INV_R2 * d(f1, "theta")
            + 2 * _INV_R * d2(f1, "r", "theta")
            + 2 * _INV_R2 * _INV_SIN * d2(f3, "theta", "psi"),
            -d2(f3, "r")
            - 2 * _INV_R * d(f3, "r")
            + _INV_R2 * _INV_SIN2 * f3
            - _INV_R2 * d2(f3, "theta")
            - _INV_R2 * _COS * _INV_SIN * d(f3, "theta")
            + _INV_R2 * _INV_SIN2 * d2(f3, "psi")
            + 2 * _INV_R2 * _INV_SIN * d(f1, "psi")
            + 2 * _INV_R * _INV_SIN * d2(f1, "r", "psi")
            + 2 * _INV_R2 * _INV_SIN * d2(f2, "theta", "psi"),
        )
    raise ValueError(f"unknown frame {frame.name!r}")


def bitsadze(f: QuaternionField) -> QuaternionField:
    """Bitsadze operator: scalar Laplacian on f0 plus grad(div)+curl(curl)
    on the vector part, in expanded per-frame form."""
    return QuaternionField(f.frame, delta0(f.f0, f.frame), *_bitsadze_vector(f))


def perturbed_mt(f: QuaternionField, lam=FORMAL, sign: int = 1) -> QuaternionField:
    """(D + sign*lam) f with lam acting as a commuting scalar."""
    lam_poly = _lam_poly(lam)
    shift = f.scale(lam_poly if sign > 0 else -lam_poly)
    return mt_apply(f) + shift


def helmholtz_residual(f: QuaternionField, lam=FORMAL) -> QuaternionField:
    """Laplacian f + lam^2 f, componentwise."""
    lam_poly = _lam_poly(lam)
    return laplacian(f) + f.scale(lam_poly * lam_poly)


def helmholtz_component_system(frame, lam=FORMAL) -> tuple:
    """The four scalar equations obtained by equating each component of the
    Helmholtz residual of the fully abstract field to zero."""
    if isinstance(frame, str):
        frame = frame_by_name(frame)
    return helmholtz_residual(abstract_field(frame), lam).components


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    frame: str
    mode: DerivativeMode
    residuals: tuple  # four CanonicalExpr values (scalar + three vector)

    @property
    def passed(self) -> bool:
        return all(r.is_zero() for r in self.residuals)

    def residual_strings(self) -> list:
        return [render_canonical(r) for r in self.residuals]

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "frame": self.frame,
            "mode": self.mode.value,
            "pass": self.passed,
            "residuals": self.residual_strings(),
        }


def _residual_mt_squared(frame: Frame) -> tuple:
    f = abstract_field(frame)
    lhs = mt_apply(mt_apply(f, "left"), "left")
    return (lhs + laplacian(f)).components


def _residual_bitsadze(frame: Frame) -> tuple:
    f = abstract_field(frame)
    lhs = mt_apply(mt_apply(f, "right"), "left")
    return (lhs + bitsadze(f)).components


def _residual_helmholtz(frame: Frame) -> tuple:
    f = abstract_field(frame)
    inner = perturbed_mt(f, FORMAL, +1)
    lhs = -(perturbed_mt(inner, FORMAL, -1))
    return (lhs - helmholtz_residual(f, FORMAL)).components


def _residual_curl_grad(frame: Frame) -> tuple:
    f = abstract_scalar_field(frame)
    return curl_alpha(grad_alpha(f.f0, frame)).components


def _residual_div_curl(frame: Frame) -> tuple:
    f = abstract_vector_field(frame)
    zero = CanonicalExpr.zero()
    return (div_alpha(curl_alpha(f)), zero, zero, zero)


def _residual_div_grad_delta0(frame: Frame) -> tuple:
    f = abstract_scalar_field(frame)
    zero = CanonicalExpr.zero()
    return (div_alpha(grad_alpha(f.f0, frame)) - delta0(f.f0, frame), zero, zero, zero)


_IDENTITIES = {
    "mt_squared": _residual_mt_squared,
    "bitsadze_factorization": _residual_bitsadze,
    "helmholtz_factorization": _residual_helmholtz,
    "curl_grad": _residual_curl_grad,
    "div_curl": _residual_div_curl,
    "div_grad_delta0": _residual_div_grad_delta0,
}

IDENTITY_NAMES = tuple(_IDENTITIES)

# frames checked by "verify all": the factorizations in every frame, the
# first-order identities where the curvilinear formulas carry content
VERIFICATION_MATRIX = {
    "mt_squared": ("cartesian", "cylindrical", "spherical"),
    "bitsadze_factorization": ("cylindrical", "spherical"),
    "helmholtz_factorization": ("cartesian", "cylindrical", "spherical"),
    "curl_grad": ("cylindrical", "spherical"),
    "div_curl": ("cylindrical", "spherical"),
    "div_grad_delta0": ("cylindrical", "spherical"),
}


def verify_identity(name: str, frame) -> IdentityReport:
    """Residuals of left-minus-right for one identity after full
    normalization; passes when every residual map is empty."""
    if name not in _IDENTITIES:
        raise ValueError(f"unknown identity {name!r}; expected one of {IDENTITY_NAMES}")
    if isinstance(frame, str):
        frame = frame_by_name(frame)
    residuals = _IDENTITIES[name](frame)
    return IdentityReport(name, frame.name, DerivativeMode.DERIVATION, tuple(residuals))


def verify_all(names=None, frames=None):
    """Reports for the verification matrix, optionally filtered."""
    reports = []
    for name in names or IDENTITY_NAMES:
        for frame_name in frames or VERIFICATION_MATRIX[name]:
            reports.append(verify_identity(name, frame_name))
    return reports
