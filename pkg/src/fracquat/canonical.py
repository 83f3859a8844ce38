"""Canonical normal form for DSL expressions.

A canonical expression is a finite map from monomials to coefficients.
Coefficients are lam-polynomials over exact complex rationals; a monomial
carries, per variable, a fractal exponent n (var^(n*alpha)), a trig
signature sin^m * cos^e with e in {0,1} (cos^2 is rewritten to 1-sin^2),
integer powers of Ea generators keyed by their scale, and a multiset of
partial-derivative symbols on the abstract components f0..f3 with sorted
(commuting) multi-indices.

Two expressions are equal exactly when their maps coincide, which is what
every identity check in the package reduces to.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coefficients import CRat, POLY_ONE, Poly, as_poly, render_poly
from .expr import (
    Add,
    CompSym,
    Div,
    EaGen,
    EvaluationDomainError,
    Expr,
    ExpressionError,
    FracPow,
    LamSym,
    Mul,
    Neg,
    NonInvertibleDivisionError,
    Num,
    Pow,
    SingularDivisionError,
    Sub,
    TrigGen,
    UnboundSymbolError,
    var_order,
)
from . import series as _series


@dataclass(frozen=True)
class Monomial:
    powers: tuple = ()  # ((var, n), ...) sorted, n != 0
    trig: tuple = ()  # ((var, m, e), ...) sorted, e in {0,1}, (m,e) != (0,0)
    ea: tuple = ()  # ((var, scale_poly, p), ...) sorted, p != 0
    dsyms: tuple = ()  # ((k, midx), ...) sorted multiset

    def sort_key(self):
        return (
            tuple((k, tuple(var_order(v) for v in midx)) for k, midx in self.dsyms),
            tuple((var_order(v), n) for v, n in self.powers),
            tuple((var_order(v), m, e) for v, m, e in self.trig),
            tuple((var_order(v), scale.sort_key(), p) for v, scale, p in self.ea),
        )

    def is_one(self) -> bool:
        return not (self.powers or self.trig or self.ea or self.dsyms)


MONOMIAL_ONE = Monomial()


def _sorted_powers(d):
    return tuple(sorted(((v, n) for v, n in d.items() if n), key=lambda t: var_order(t[0])))


def _sorted_trig(d):
    return tuple(
        sorted(((v, m, e) for v, (m, e) in d.items() if m or e), key=lambda t: var_order(t[0]))
    )


def _sorted_ea(d):
    return tuple(
        sorted(
            ((v, s, p) for (v, s), p in d.items() if p),
            key=lambda t: (var_order(t[0]), t[1].sort_key()),
        )
    )


def _mul_monomials(a: Monomial, b: Monomial):
    """Product of two monomials as [(monomial, +/-1 coefficient)] pairs;
    the Pythagorean rewrite of cos^2 may split the product in two."""
    powers = {v: n for v, n in a.powers}
    for v, n in b.powers:
        powers[v] = powers.get(v, 0) + n

    ea = {(v, s): p for v, s, p in a.ea}
    for v, s, p in b.ea:
        ea[(v, s)] = ea.get((v, s), 0) + p

    dsyms = tuple(sorted(a.dsyms + b.dsyms))

    trig = {v: [m, e] for v, m, e in a.trig}
    for v, m, e in b.trig:
        if v in trig:
            trig[v][0] += m
            trig[v][1] += e
        else:
            trig[v] = [m, e]

    # cos^2 -> 1 - sin^2, variable by variable
    expansions = [({}, 1)]
    for v, (m, e) in trig.items():
        if e <= 1:
            for tmap, _ in expansions:
                tmap[v] = (m, e)
            continue
        assert e == 2
        new = []
        for tmap, sign in expansions:
            low = dict(tmap)
            low[v] = (m, 0)
            high = dict(tmap)
            high[v] = (m + 2, 0)
            new.append((low, sign))
            new.append((high, -sign))
        expansions = new

    out = []
    for tmap, sign in expansions:
        out.append(
            (
                Monomial(_sorted_powers(powers), _sorted_trig(tmap), _sorted_ea(ea), dsyms),
                sign,
            )
        )
    return out


class CanonicalExpr:
    """Finite monomial-to-coefficient map with exact ring arithmetic."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for mono, coeff in terms.items() if isinstance(terms, dict) else terms:
                coeff = as_poly(coeff)
                if coeff:
                    acc = cleaned.get(mono)
                    coeff = coeff if acc is None else acc + coeff
                    if coeff:
                        cleaned[mono] = coeff
                    elif mono in cleaned:
                        del cleaned[mono]
        self._terms = cleaned

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> CanonicalExpr:
        return CanonicalExpr()

    @staticmethod
    def one() -> CanonicalExpr:
        return CanonicalExpr({MONOMIAL_ONE: POLY_ONE})

    @staticmethod
    def const(c) -> CanonicalExpr:
        return CanonicalExpr({MONOMIAL_ONE: as_poly(c)})

    @staticmethod
    def from_poly(poly: Poly) -> CanonicalExpr:
        return CanonicalExpr({MONOMIAL_ONE: poly})

    @staticmethod
    def lam() -> CanonicalExpr:
        return CanonicalExpr.from_poly(Poly.lam())

    @staticmethod
    def fractal_power(var: str, n: int) -> CanonicalExpr:
        if n == 0:
            return CanonicalExpr.one()
        return CanonicalExpr({Monomial(powers=((var, n),)): POLY_ONE})

    @staticmethod
    def trig(var: str, kind: str) -> CanonicalExpr:
        sig = (var, 1, 0) if kind == "sin" else (var, 0, 1)
        return CanonicalExpr({Monomial(trig=(sig,)): POLY_ONE})

    @staticmethod
    def ea_power(var: str, scale: Poly, p: int = 1) -> CanonicalExpr:
        if scale.is_zero() or p == 0:
            return CanonicalExpr.one()  # E_alpha(0) = 1
        return CanonicalExpr({Monomial(ea=((var, scale, p),)): POLY_ONE})

    @staticmethod
    def component(k: int, midx=()) -> CanonicalExpr:
        midx = tuple(sorted(midx, key=var_order))
        return CanonicalExpr({Monomial(dsyms=((k, midx),)): POLY_ONE})

    # -- structure --------------------------------------------------------

    @property
    def terms(self) -> dict:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def constant_coefficient(self) -> Poly:
        return self._terms.get(MONOMIAL_ONE, Poly())

    def __eq__(self, other):
        if isinstance(other, CanonicalExpr):
            return self._terms == other._terms
        if isinstance(other, (int, CRat, Poly)):
            return self._terms == CanonicalExpr.const(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset((m, p) for m, p in self._terms.items()))

    def __repr__(self):
        return f"<CanonicalExpr {render_canonical(self)}>"

    def __str__(self):
        return render_canonical(self)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = as_canonical_scalar(other)
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            prev = acc.get(mono)
            acc[mono] = coeff if prev is None else prev + coeff
        return CanonicalExpr(acc)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-as_canonical_scalar(other))

    def __rsub__(self, other):
        return as_canonical_scalar(other) - self

    def __neg__(self):
        return CanonicalExpr({m: -p for m, p in self._terms.items()})

    def __mul__(self, other):
        other = as_canonical_scalar(other)
        acc = {}
        for m1, p1 in self._terms.items():
            for m2, p2 in other._terms.items():
                coeff = p1 * p2
                for mono, sign in _mul_monomials(m1, m2):
                    add = coeff if sign == 1 else -coeff
                    prev = acc.get(mono)
                    acc[mono] = add if prev is None else prev + add
        return CanonicalExpr(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("powers of expressions must be integers")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = CanonicalExpr.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __truediv__(self, other):
        return self * as_canonical_scalar(other).inverse()

    def __rtruediv__(self, other):
        return as_canonical_scalar(other) * self.inverse()

    def inverse(self) -> CanonicalExpr:
        """Inverse of a unit monomial: constant coefficient, no cos factor,
        no component symbols.  Everything the coordinate formulas divide by
        (r^alpha powers, sin_alpha powers, Ea factors, numbers) is a unit."""
        if self.is_zero():
            raise SingularDivisionError("division by an expression that normalizes to zero")
        if len(self._terms) != 1:
            raise NonInvertibleDivisionError(
                f"divisor is not a single monomial: {render_canonical(self)}"
            )
        mono, coeff = next(iter(self._terms.items()))
        if mono.dsyms:
            raise NonInvertibleDivisionError("cannot divide by abstract component symbols")
        if any(e for _, _, e in mono.trig):
            raise NonInvertibleDivisionError("cannot divide by cosa factors")
        if not coeff.is_constant():
            raise NonInvertibleDivisionError("cannot divide by a lam-dependent coefficient")
        inv_mono = Monomial(
            powers=tuple((v, -n) for v, n in mono.powers),
            trig=tuple((v, -m, 0) for v, m, _ in mono.trig),
            ea=tuple((v, s, -p) for v, s, p in mono.ea),
        )
        return CanonicalExpr({inv_mono: coeff.inverse()})


def as_canonical_scalar(x) -> CanonicalExpr:
    if isinstance(x, CanonicalExpr):
        return x
    if isinstance(x, Poly):
        return CanonicalExpr.from_poly(x)
    if isinstance(x, (int, Fraction, CRat)):
        return CanonicalExpr.const(x)
    if isinstance(x, Expr):
        return normalize(x)
    raise TypeError(f"cannot interpret {x!r} as a canonical expression")


def normalize(e) -> CanonicalExpr:
    """Unique normal form; idempotent, and total on the grammar except for
    division by non-unit expressions."""
    if isinstance(e, CanonicalExpr):
        return e
    if isinstance(e, Num):
        return CanonicalExpr.const(e.value)
    if isinstance(e, LamSym):
        return CanonicalExpr.lam()
    if isinstance(e, FracPow):
        return CanonicalExpr.fractal_power(e.var, e.n)
    if isinstance(e, TrigGen):
        return CanonicalExpr.trig(e.var, e.kind)
    if isinstance(e, EaGen):
        scale = normalize(e.scale)
        extra = {m for m in scale.terms if not m.is_one()}
        if extra:
            raise ExpressionError("Ea scale must normalize to a scalar coefficient")
        return CanonicalExpr.ea_power(e.var, scale.constant_coefficient())
    if isinstance(e, CompSym):
        return CanonicalExpr.component(e.k, e.midx)
    if isinstance(e, Add):
        return normalize(e.left) + normalize(e.right)
    if isinstance(e, Sub):
        return normalize(e.left) - normalize(e.right)
    if isinstance(e, Mul):
        return normalize(e.left) * normalize(e.right)
    if isinstance(e, Div):
        return normalize(e.num) / normalize(e.den)
    if isinstance(e, Pow):
        return normalize(e.base) ** e.exponent
    if isinstance(e, Neg):
        return -normalize(e.operand)
    raise TypeError(f"not an expression node: {e!r}")


def equal(a, b) -> bool:
    """Exact equality of canonical forms."""
    return (as_canonical_scalar(a) - as_canonical_scalar(b)).is_zero()


def canon(text: str, frame=None) -> CanonicalExpr:
    """Parse and normalize in one step (test and fixture convenience)."""
    from .parser import parse

    return normalize(parse(text, frame))


# -- rendering --------------------------------------------------------------


def dsym_name(k: int, midx) -> str:
    if not midx:
        return f"f{k}"
    return f"d(f{k},{','.join(midx)})"


def _render_monomial(mono: Monomial) -> str:
    pieces = []
    for v, n in sorted(mono.powers, key=lambda t: var_order(t[0])):
        pieces.append(f"P({v},{n})")
    for v, m, e in sorted(mono.trig, key=lambda t: var_order(t[0])):
        if m:
            pieces.append(f"sina({v})" + (f"^{m}" if m != 1 else ""))
        if e:
            pieces.append(f"cosa({v})")
    for v, s, p in mono.ea:
        pieces.append(f"Ea({render_poly(s)}, {v})" + (f"^{p}" if p != 1 else ""))
    for k, midx in mono.dsyms:
        pieces.append(dsym_name(k, midx))
    return "*".join(pieces)


def _split_sign(poly: Poly):
    if len(poly.terms) == 1:
        c = poly.terms[0][1]
        if c.re < 0 or (c.re == 0 and c.im < 0):
            return -1, -poly
    return 1, poly


def render_canonical(ce: CanonicalExpr) -> str:
    """Deterministic DSL rendering; re-parsing and normalizing the output
    reproduces the same canonical map."""
    if ce.is_zero():
        return "0"
    rendered = []
    for mono in sorted(ce.terms, key=Monomial.sort_key):
        poly = ce.terms[mono]
        sign, poly = _split_sign(poly)
        body = _render_monomial(mono)
        if not body:
            coeff = render_poly(poly)
        elif poly == POLY_ONE:
            coeff = ""
        elif len(poly.terms) > 1:
            coeff = f"({render_poly(poly)})*"
        else:
            coeff = f"{render_poly(poly)}*"
        rendered.append((sign, coeff + body if body else coeff))
    first_sign, first_body = rendered[0]
    out = ("-" if first_sign < 0 else "") + first_body
    for sign, body in rendered[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out


# -- numeric evaluation ------------------------------------------------------


def _coeff_value(poly: Poly, lam) -> complex:
    if poly.is_constant():
        return poly.constant_value().to_complex()
    if lam is None:
        raise UnboundSymbolError("expression contains lam but no lam value was given")
    return poly.eval(complex(lam))


def _fractal_arg(var: str, point: dict, alpha: float) -> float:
    if var not in point:
        raise UnboundSymbolError(f"no value bound for variable {var!r}")
    x = float(point[var])
    if x < 0:
        raise EvaluationDomainError(f"{var} = {x} is outside the fractal domain (needs >= 0)")
    return x**alpha


def eval_canonical(
    ce,
    alpha: float,
    point: dict,
    bindings: dict | None = None,
    lam=None,
    tol: float = 1e-12,
) -> complex:
    """Evaluate a canonical expression at a point.

    point maps variables to nonnegative reals (positive where negative
    fractal powers occur); bindings maps rendered component symbols such
    as "f1" or "d(f1,r)" to complex constants or callables of the point.
    """
    ce = as_canonical_scalar(ce)
    alpha = _series.validate_alpha(alpha)
    bindings = bindings or {}
    total = 0j
    for mono, poly in ce.terms.items():
        value = _coeff_value(poly, lam)
        for v, n in mono.powers:
            xa = _fractal_arg(v, point, alpha)
            if xa == 0 and n < 0:
                raise EvaluationDomainError(f"{v} = 0 with negative fractal exponent {n}")
            value *= xa**n
        for v, m, e in mono.trig:
            u = _fractal_arg(v, point, alpha)
            if m:
                sv = _series.sin_alpha(alpha, u, tol)
                if sv == 0 and m < 0:
                    raise EvaluationDomainError(f"sina({v}) vanishes at {v} = {point[v]}")
                value *= sv**m
            if e:
                value *= _series.cos_alpha(alpha, u, tol)
        for v, s, p in mono.ea:
            u = _coeff_value(s, lam) * _fractal_arg(v, point, alpha)
            ev = _series.ml_exp(alpha, u, tol)
            if ev == 0 and p < 0:
                raise EvaluationDomainError(f"Ea factor vanishes at {v} = {point[v]}")
            value *= ev**p
        for k, midx in mono.dsyms:
            name = dsym_name(k, midx)
            if name not in bindings:
                raise UnboundSymbolError(f"no binding for component symbol {name}")
            bound = bindings[name]
            value *= complex(bound(point)) if callable(bound) else complex(bound)
        total += value
    return total
