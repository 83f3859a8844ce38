"""Abstract syntax for the expression DSL.

Generators mirror what the coordinate formulas need: fractal monomials
P(var, n) = var^(n*alpha), the fractal trig pair sina/cosa of var^alpha,
the scaled exponential Ea(c, var) = E_alpha(c * var^alpha), the formal
parameter lam, and the abstract field components f0..f3 (optionally
carrying a partial-derivative multi-index via d(...)).
"""

from __future__ import annotations

from dataclasses import dataclass, field

VARIABLES = ("x", "y", "z", "r", "theta", "psi")
_VAR_INDEX = {v: i for i, v in enumerate(VARIABLES)}
COMPONENT_NAMES = ("f0", "f1", "f2", "f3")


class ExpressionError(Exception):
    """Base class for expression-layer failures."""


class ParseError(ExpressionError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SingularDivisionError(ExpressionError):
    """Division by an expression whose canonical form is zero."""


class NonInvertibleDivisionError(ExpressionError):
    """Division by a canonical form that is not a single unit monomial."""


class UnboundSymbolError(ExpressionError):
    """Numeric evaluation hit a variable or component without a binding."""


class EvaluationDomainError(ExpressionError):
    """Numeric evaluation outside the valid fractal domain (e.g. r <= 0)."""


def var_order(name: str) -> int:
    return _VAR_INDEX[name]


def sort_vars(names) -> tuple:
    return tuple(sorted(names, key=var_order))


class Expr:
    """Marker base for AST nodes; all nodes are frozen dataclasses."""

    __slots__ = ()


@dataclass(frozen=True)
class Num(Expr):
    value: object  # CRat


@dataclass(frozen=True)
class LamSym(Expr):
    pass


@dataclass(frozen=True)
class FracPow(Expr):
    var: str
    n: int


@dataclass(frozen=True)
class TrigGen(Expr):
    var: str
    kind: str  # "sin" | "cos"


@dataclass(frozen=True)
class EaGen(Expr):
    scale: Expr  # must normalize to a coefficient (lam polynomial)
    var: str


@dataclass(frozen=True)
class CompSym(Expr):
    k: int
    midx: tuple = field(default=())  # sorted tuple of variable names

    def __post_init__(self):
        object.__setattr__(self, "midx", sort_vars(self.midx))


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div(Expr):
    num: Expr
    den: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr
