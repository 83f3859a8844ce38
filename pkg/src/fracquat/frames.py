"""Cantor-type coordinate frames and quaternion-valued fields.

Frame vectors (cylindrical shown; spherical analogous) are the fractal
trig combinations of the quaternionic units:

    e_r     = cosa(theta) i1 + sina(theta) i2
    e_theta = -sina(theta) i1 + cosa(theta) i2
    e_z     = i3

They are orthonormal once cos^2 -> 1 - sin^2 is applied, and satisfy
e_r * e_theta = e_z (resp. e_psi) under the quaternion product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import CanonicalExpr, as_canonical_scalar
from .quaternion import ComplexQuaternion

_ZERO = CanonicalExpr.zero()
_ONE = CanonicalExpr.one()


@dataclass(frozen=True)
class Frame:
    name: str
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))

    def frame_vectors(self) -> tuple:
        """The three frame vectors as pure quaternions with canonical
        expression coefficients."""
        sin = CanonicalExpr.trig
        if self.name == "cartesian":
            return (
                ComplexQuaternion(_ZERO, _ONE, _ZERO, _ZERO),
                ComplexQuaternion(_ZERO, _ZERO, _ONE, _ZERO),
                ComplexQuaternion(_ZERO, _ZERO, _ZERO, _ONE),
            )
        if self.name == "cylindrical":
            st, ct = sin("theta", "sin"), sin("theta", "cos")
            return (
                ComplexQuaternion(_ZERO, ct, st, _ZERO),
                ComplexQuaternion(_ZERO, -st, ct, _ZERO),
                ComplexQuaternion(_ZERO, _ZERO, _ZERO, _ONE),
            )
        if self.name == "spherical":
            st, ct = sin("theta", "sin"), sin("theta", "cos")
            sp, cp = sin("psi", "sin"), sin("psi", "cos")
            return (
                ComplexQuaternion(_ZERO, st * cp, st * sp, ct),
                ComplexQuaternion(_ZERO, ct * cp, ct * sp, -st),
                ComplexQuaternion(_ZERO, -sp, cp, _ZERO),
            )
        raise ValueError(f"unknown frame {self.name!r}")

    def __str__(self):
        return self.name


CARTESIAN = Frame("cartesian", ("x", "y", "z"))
CYLINDRICAL = Frame("cylindrical", ("r", "theta", "z"))
SPHERICAL = Frame("spherical", ("r", "theta", "psi"))

FRAMES = {f.name: f for f in (CARTESIAN, CYLINDRICAL, SPHERICAL)}


def frame_by_name(name: str) -> Frame:
    try:
        return FRAMES[name]
    except KeyError:
        raise ValueError(
            f"unknown frame {name!r}; expected one of {sorted(FRAMES)}"
        ) from None


@dataclass(frozen=True)
class QuaternionField:
    """A frame plus four component expressions in the frame's local basis:
    f = f0 + f1 e_1 + f2 e_2 + f3 e_3."""

    frame: Frame
    f0: CanonicalExpr
    f1: CanonicalExpr
    f2: CanonicalExpr
    f3: CanonicalExpr

    @property
    def components(self) -> tuple:
        return (self.f0, self.f1, self.f2, self.f3)

    @property
    def vector_components(self) -> tuple:
        return (self.f1, self.f2, self.f3)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def is_pure_vector(self) -> bool:
        return self.f0.is_zero()

    def map(self, fn) -> QuaternionField:
        return QuaternionField(self.frame, *(fn(c) for c in self.components))

    def __add__(self, other):
        if other.frame != self.frame:
            raise ValueError("cannot add fields in different frames")
        return QuaternionField(
            self.frame, *(a + b for a, b in zip(self.components, other.components))
        )

    def __sub__(self, other):
        if other.frame != self.frame:
            raise ValueError("cannot subtract fields in different frames")
        return QuaternionField(
            self.frame, *(a - b for a, b in zip(self.components, other.components))
        )

    def __neg__(self):
        return self.map(lambda c: -c)

    def scale(self, s) -> QuaternionField:
        return self.map(lambda c: s * c)


def field(frame: Frame, f0=0, f1=0, f2=0, f3=0) -> QuaternionField:
    return QuaternionField(frame, *(as_canonical_scalar(c) for c in (f0, f1, f2, f3)))


def zero_field(frame: Frame) -> QuaternionField:
    return field(frame)


def scalar_field(frame: Frame, f0) -> QuaternionField:
    return field(frame, f0=f0)


def vector_field(frame: Frame, f1, f2, f3) -> QuaternionField:
    return field(frame, 0, f1, f2, f3)


def abstract_field(frame: Frame) -> QuaternionField:
    """f with all four components left as abstract symbols f0..f3."""
    return QuaternionField(frame, *(CanonicalExpr.component(k) for k in range(4)))


def abstract_scalar_field(frame: Frame) -> QuaternionField:
    return field(frame, f0=CanonicalExpr.component(0))


def abstract_vector_field(frame: Frame) -> QuaternionField:
    return field(
        frame,
        0,
        CanonicalExpr.component(1),
        CanonicalExpr.component(2),
        CanonicalExpr.component(3),
    )
