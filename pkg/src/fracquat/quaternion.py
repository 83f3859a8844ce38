"""Complex quaternions H(C) over a generic coefficient ring.

Coefficients may be python complex numbers or CanonicalExpr values (or
anything supporting +, -, *), so the same algebra backs numeric checks
and exact symbolic verification.  The complex unit lives inside the
coefficients and therefore commutes with the quaternionic units, and the
algebra has zero divisors, e.g. (1 + i*i1)(1 - i*i1) = 0.
"""

from __future__ import annotations


class ComplexQuaternion:
    """q = q0 + q1*i1 + q2*i2 + q3*i3 with Hamilton products of the units."""

    __slots__ = ("q0", "q1", "q2", "q3")

    def __init__(self, q0, q1, q2, q3):
        self.q0 = q0
        self.q1 = q1
        self.q2 = q2
        self.q3 = q3

    @property
    def components(self):
        return (self.q0, self.q1, self.q2, self.q3)

    def __add__(self, other):
        return ComplexQuaternion(
            self.q0 + other.q0, self.q1 + other.q1, self.q2 + other.q2, self.q3 + other.q3
        )

    def __sub__(self, other):
        return ComplexQuaternion(
            self.q0 - other.q0, self.q1 - other.q1, self.q2 - other.q2, self.q3 - other.q3
        )

    def __neg__(self):
        return ComplexQuaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def scale(self, s):
        return ComplexQuaternion(s * self.q0, s * self.q1, s * self.q2, s * self.q3)

    def __mul__(self, other):
        if isinstance(other, ComplexQuaternion):
            return qmul(self, other)
        return self.scale(other)

    def __rmul__(self, s):
        return self.scale(s)

    def __eq__(self, other):
        if not isinstance(other, ComplexQuaternion):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"ComplexQuaternion({self.q0!r}, {self.q1!r}, {self.q2!r}, {self.q3!r})"


def qmul(p: ComplexQuaternion, q: ComplexQuaternion) -> ComplexQuaternion:
    """pq = p0*q0 - <p,q> + p0*qvec + q0*pvec + [p,q] spelled out on the basis."""
    return ComplexQuaternion(
        p.q0 * q.q0 - (p.q1 * q.q1 + p.q2 * q.q2 + p.q3 * q.q3),
        p.q0 * q.q1 + q.q0 * p.q1 + (p.q2 * q.q3 - p.q3 * q.q2),
        p.q0 * q.q2 + q.q0 * p.q2 + (p.q3 * q.q1 - p.q1 * q.q3),
        p.q0 * q.q3 + q.q0 * p.q3 + (p.q1 * q.q2 - p.q2 * q.q1),
    )


def dot(p: ComplexQuaternion, q: ComplexQuaternion):
    """Complex-bilinear (not Hermitian) scalar product of the vector parts."""
    return p.q1 * q.q1 + p.q2 * q.q2 + p.q3 * q.q3


def cross(p: ComplexQuaternion, q: ComplexQuaternion) -> ComplexQuaternion:
    """Determinant bracket [p,q] of the vector parts, as a pure quaternion."""
    zero = p.q0 * 0
    return ComplexQuaternion(
        zero,
        p.q2 * q.q3 - p.q3 * q.q2,
        p.q3 * q.q1 - p.q1 * q.q3,
        p.q1 * q.q2 - p.q2 * q.q1,
    )


def sc(q: ComplexQuaternion):
    """Scalar part."""
    return q.q0


def vec(q: ComplexQuaternion) -> ComplexQuaternion:
    """Vector part, as a quaternion with zero scalar component."""
    return ComplexQuaternion(q.q0 * 0, q.q1, q.q2, q.q3)
