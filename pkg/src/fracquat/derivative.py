"""Symbolic local fractional partial differentiation.

Two semantic modes exist because the operational rules of the underlying
calculus conflict on powers: the Leibniz product rule together with the
Gamma-normalized power shift give different answers for the derivative of
(x^alpha)^2 unless alpha = 1 (the package exhibits this as a test).

* Derivation mode (default, used for every coordinate identity):
  D[P(v,n)] = n*P(v,n-1), D[sina(v)] = cosa(v), D[cosa(v)] = -sina(v),
  D[Ea(c,v)] = c*Ea(c,v), generators in other variables are constants,
  and on abstract components the derivative multi-index grows.  This is
  the unique normalization under which the per-frame gradient/divergence/
  curl formulas satisfy curl(grad) = 0 and the factorizations close.

* Gamma-normalized mode: the exact index shift J_n -> J_(n-1) on the
  basis J_n(v) = v^(n*alpha)/Gamma(1+n*alpha), linear only; products or
  quotients of generators are rejected.
"""

from __future__ import annotations

import enum
from dataclasses import replace

from .canonical import CanonicalExpr, Monomial, as_canonical_scalar
from .coefficients import Poly
from .expr import ExpressionError, VARIABLES, sort_vars, var_order


class ModeViolationError(ExpressionError):
    """Input outside the linear J-basis fragment handled by gamma mode."""


class DerivativeMode(str, enum.Enum):
    DERIVATION = "derivation"
    GAMMA = "gamma"


def _check_var(var: str) -> str:
    if var not in VARIABLES:
        raise ValueError(f"unknown variable {var!r}")
    return var


def _with_power(mono: Monomial, var: str, n: int) -> Monomial:
    powers = tuple(t for t in mono.powers if t[0] != var)
    if n:
        powers = tuple(sorted(powers + ((var, n),), key=lambda t: var_order(t[0])))
    return replace(mono, powers=powers)


def _with_trig(mono: Monomial, var: str, m: int, e: int) -> Monomial:
    trig = tuple(t for t in mono.trig if t[0] != var)
    if m or e:
        trig = tuple(sorted(trig + ((var, m, e),), key=lambda t: var_order(t[0])))
    return replace(mono, trig=trig)


def _diff_monomial(mono: Monomial, var: str) -> CanonicalExpr:
    """Leibniz rule across the factor groups of one monomial."""
    parts = CanonicalExpr.zero()

    for v, n in mono.powers:
        if v == var:
            parts = parts + n * CanonicalExpr({_with_power(mono, var, n - 1): Poly.const(1)})

    for v, m, e in mono.trig:
        if v != var:
            continue
        if e == 0:
            # (sin^m)' = m sin^(m-1) cos
            parts = parts + m * CanonicalExpr({_with_trig(mono, var, m - 1, 1): Poly.const(1)})
        else:
            # (sin^m cos)' = m sin^(m-1) cos^2 - sin^(m+1)
            #              = m sin^(m-1) - (m+1) sin^(m+1)   after cos^2 -> 1-sin^2
            if m:
                parts = parts + m * CanonicalExpr(
                    {_with_trig(mono, var, m - 1, 0): Poly.const(1)}
                )
            parts = parts - (m + 1) * CanonicalExpr(
                {_with_trig(mono, var, m + 1, 0): Poly.const(1)}
            )

    for v, scale, p in mono.ea:
        if v == var:
            parts = parts + (p * scale) * CanonicalExpr({mono: Poly.const(1)})

    for i, (k, midx) in enumerate(mono.dsyms):
        bumped = (k, sort_vars(midx + (var,)))
        dsyms = tuple(sorted(mono.dsyms[:i] + (bumped,) + mono.dsyms[i + 1 :]))
        parts = parts + CanonicalExpr({replace(mono, dsyms=dsyms): Poly.const(1)})

    return parts


def d_alpha(e, var: str) -> CanonicalExpr:
    """Derivation-mode local fractional partial derivative."""
    _check_var(var)
    ce = as_canonical_scalar(e)
    out = CanonicalExpr.zero()
    for mono, coeff in ce.terms.items():
        out = out + coeff * _diff_monomial(mono, var)
    return out


def nth_d_alpha(e, var: str, order: int) -> CanonicalExpr:
    if order < 1:
        raise ValueError("order must be a positive integer")
    ce = as_canonical_scalar(e)
    for _ in range(order):
        ce = d_alpha(ce, var)
    return ce


def jpoly_coefficients(e, var: str) -> list:
    """Coefficients [c_0, ..., c_N] of a pure J-basis polynomial in var.

    Raises ModeViolationError when the normalized input contains anything
    other than nonnegative powers of the single variable: products or
    quotients of generators, trig or Ea factors, component symbols, other
    variables.
    """
    _check_var(var)
    ce = as_canonical_scalar(e)
    coeffs = {}
    for mono, coeff in ce.terms.items():
        if mono.trig or mono.ea or mono.dsyms:
            raise ModeViolationError(
                "gamma mode handles only linear combinations over the J-basis; "
                f"got generator product {mono}"
            )
        if not mono.powers:
            coeffs[0] = coeff
            continue
        if len(mono.powers) > 1 or mono.powers[0][0] != var:
            raise ModeViolationError(
                f"gamma mode input must be a polynomial in {var!r} alone"
            )
        n = mono.powers[0][1]
        if n < 0:
            raise ModeViolationError("gamma mode input has a negative power (a quotient)")
        coeffs[n] = coeff
    if not coeffs:
        return [Poly()]
    out = [Poly() for _ in range(max(coeffs) + 1)]
    for n, c in coeffs.items():
        out[n] = c
    return out


def d_alpha_gamma(e, var: str) -> CanonicalExpr:
    """Gamma-normalized derivative: index shift J_n -> J_(n-1) on the
    normalized monomials of var, with J_0 -> 0."""
    coeffs = jpoly_coefficients(e, var)
    out = CanonicalExpr.zero()
    for n, c in enumerate(coeffs):
        if n == 0 or c.is_zero():
            continue
        out = out + c * CanonicalExpr.fractal_power(var, n - 1)
    return out


def differentiate(e, var: str, mode: DerivativeMode = DerivativeMode.DERIVATION) -> CanonicalExpr:
    mode = DerivativeMode(mode)
    if mode is DerivativeMode.DERIVATION:
        return d_alpha(e, var)
    return d_alpha_gamma(e, var)
