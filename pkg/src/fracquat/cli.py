"""Command line front end.

Subcommands: apply (operators on a field spec), verify (identity suite),
diff (symbolic derivative of a DSL expression), eval (numeric evaluation
of a field spec at a point), series (fractal special functions).

Exit codes: 0 success, 1 verification or convergence failure, 2 usage,
parse or validation error.  Structured output is one JSON document per
line; text output is plain ASCII rendering of canonical forms.
"""

from __future__ import annotations

import argparse
import json
import sys

from .canonical import canon, eval_canonical, render_canonical
from .derivative import DerivativeMode, differentiate
from .expr import ExpressionError
from .frames import FRAMES, QuaternionField, frame_by_name
from .quatops import (
    FORMAL,
    IDENTITY_NAMES,
    VERIFICATION_MATRIX,
    bitsadze,
    helmholtz_residual,
    laplacian,
    mt_apply,
    verify_identity,
)
from .series import SeriesConvergenceError, evaluate_series, validate_alpha

COMPONENT_KEYS = ("f0", "f1", "f2", "f3")

_OPERATORS = {
    "mt": lambda f, lam: mt_apply(f, "left"),
    "mt-right": lambda f, lam: mt_apply(f, "right"),
    "laplacian": lambda f, lam: laplacian(f),
    "bitsadze": lambda f, lam: bitsadze(f),
    "helmholtz": lambda f, lam: helmholtz_residual(f, lam),
}


class SpecError(ValueError):
    """Field spec document failed validation."""


def _parse_lambda(raw):
    if raw is None or raw == FORMAL:
        return FORMAL
    ce = canon(str(raw), ())
    nonconstant = [m for m in ce.terms if not m.is_one()]
    coeff = ce.constant_coefficient()
    if nonconstant or not coeff.is_constant():
        raise SpecError(f"lambda must be a complex constant or 'formal', got {raw!r}")
    return coeff.constant_value()


def load_field_spec(path: str):
    """Read a field spec document: {"alpha": ..., "frame": ...,
    "components": {"f0": ..., ...}, "lambda": ...}.  Missing components
    default to "0".  Returns (alpha, QuaternionField, lambda)."""
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise SpecError("field spec must be a JSON object")
    for key in ("alpha", "frame"):
        if key not in doc:
            raise SpecError(f"field spec is missing the {key!r} key")
    alpha = validate_alpha(doc["alpha"])
    frame = frame_by_name(doc["frame"])
    components = doc.get("components", {})
    if not isinstance(components, dict):
        raise SpecError("'components' must be an object with keys f0..f3")
    unknown = set(components) - set(COMPONENT_KEYS)
    if unknown:
        raise SpecError(f"unknown component keys {sorted(unknown)}; expected f0..f3")
    parsed = [canon(str(components.get(key, "0")), frame) for key in COMPONENT_KEYS]
    lam = _parse_lambda(doc.get("lambda"))
    return alpha, QuaternionField(frame, *parsed), lam


def _parse_point(raw: str, frame) -> dict:
    point = {}
    for item in raw.split(","):
        if "=" not in item:
            raise SpecError(f"bad point entry {item!r}; expected var=value")
        name, value = item.split("=", 1)
        name = name.strip()
        if name not in frame.variables:
            raise SpecError(f"variable {name!r} is not in frame {frame.name}")
        point[name] = float(value)
    return point


def _parse_complex(raw: str) -> complex:
    raw = raw.strip()
    for candidate in (raw, raw.replace("i", "j")):
        try:
            return complex(candidate)
        except ValueError:
            continue
    raise SpecError(f"cannot parse complex number {raw!r}")


def _emit_field(out: QuaternionField, args, extra: dict):
    if args.format == "structured":
        doc = dict(extra)
        doc["frame"] = out.frame.name
        doc["components"] = {
            key: render_canonical(c) for key, c in zip(COMPONENT_KEYS, out.components)
        }
        print(json.dumps(doc))
    else:
        for key, c in zip(COMPONENT_KEYS, out.components):
            print(f"{key} = {render_canonical(c)}")


def cmd_apply(args) -> int:
    alpha, f, lam = load_field_spec(args.spec)
    out = _OPERATORS[args.operator](f, lam)
    _emit_field(out, args, {"operator": args.operator, "alpha": alpha})
    return 0


def cmd_verify(args) -> int:
    names = IDENTITY_NAMES if args.identity == "all" else (args.identity,)
    all_pass = True
    for name in names:
        frames = VERIFICATION_MATRIX[name] if args.frame == "all" else (args.frame,)
        for frame_name in frames:
            report = verify_identity(name, frame_name)
            all_pass = all_pass and report.passed
            if args.format == "structured":
                print(json.dumps(report.to_dict()))
            else:
                status = "PASS" if report.passed else "FAIL"
                line = f"{status} {report.identity} {report.frame} (mode={report.mode.value})"
                if not report.passed:
                    line += " residuals: " + "; ".join(report.residual_strings())
                print(line)
    return 0 if all_pass else 1


def cmd_diff(args) -> int:
    frame = frame_by_name(args.frame)
    out = differentiate(canon(args.expr, frame), args.var, DerivativeMode(args.mode))
    rendered = render_canonical(out)
    if args.format == "structured":
        print(
            json.dumps(
                {"input": args.expr, "var": args.var, "mode": args.mode, "derivative": rendered}
            )
        )
    else:
        print(rendered)
    return 0


def cmd_eval(args) -> int:
    alpha, f, lam = load_field_spec(args.spec)
    if args.alpha is not None:
        alpha = validate_alpha(args.alpha)
    if args.lam is not None:
        lam_value = _parse_complex(args.lam)
    else:
        lam_value = None if lam == FORMAL else lam.to_complex()
    point = _parse_point(args.at, f.frame)
    values = [
        eval_canonical(c, alpha, point, lam=lam_value, tol=args.tol) for c in f.components
    ]
    if args.format == "structured":
        print(
            json.dumps(
                {
                    "frame": f.frame.name,
                    "alpha": alpha,
                    "point": point,
                    "components": {
                        key: {"re": v.real, "im": v.imag}
                        for key, v in zip(COMPONENT_KEYS, values)
                    },
                }
            )
        )
    else:
        for key, v in zip(COMPONENT_KEYS, values):
            print(f"{key} = {v}")
    return 0


def cmd_series(args) -> int:
    u = _parse_complex(args.u)
    try:
        value, terms = evaluate_series(args.function, args.alpha, u, args.tol)
    except SeriesConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "structured":
        print(
            json.dumps(
                {
                    "function": args.function,
                    "alpha": args.alpha,
                    "u": {"re": u.real, "im": u.imag},
                    "value": {"re": value.real, "im": value.imag},
                    "terms": terms,
                }
            )
        )
    else:
        shown = value.real if value.imag == 0 else value
        print(f"{args.function}(alpha={args.alpha}, u={args.u}) = {shown} ({terms} terms)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracquat",
        description="local fractional vector calculus over complex quaternions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "structured"), default="text",
            help="text rendering or one JSON document per line",
        )

    p = sub.add_parser("apply", help="apply an operator to a field spec file")
    p.add_argument("spec", help="path to a JSON field spec document")
    p.add_argument(
        "--operator", "-o", required=True, choices=sorted(_OPERATORS),
        help="operator to apply",
    )
    add_format(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="verify operator identities symbolically")
    p.add_argument(
        "identity", nargs="?", default="all", choices=IDENTITY_NAMES + ("all",),
        help="identity name or 'all'",
    )
    p.add_argument(
        "--frame", default="all", choices=tuple(FRAMES) + ("all",),
        help="frame name or 'all' (the documented verification matrix)",
    )
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diff", help="symbolic local fractional derivative")
    p.add_argument("expr", help="DSL expression")
    p.add_argument("--var", required=True, help="differentiation variable")
    p.add_argument("--frame", required=True, choices=tuple(FRAMES))
    p.add_argument(
        "--mode", default="derivation", choices=("derivation", "gamma"),
        help="derivation rules or the Gamma-normalized index shift",
    )
    add_format(p)
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("eval", help="evaluate a field spec numerically at a point")
    p.add_argument("spec", help="path to a JSON field spec document")
    p.add_argument("--at", required=True, help="point, e.g. r=2,theta=0.7,z=1")
    p.add_argument("--alpha", type=float, default=None, help="override the field file alpha")
    p.add_argument("--lam", default=None, help="numeric value for lam if present")
    p.add_argument("--tol", type=float, default=1e-12, help="series tolerance")
    add_format(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("series", help="evaluate Ea, sina or cosa numerically")
    p.add_argument("function", choices=("Ea", "sina", "cosa"))
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--u", required=True, help="complex argument, e.g. 1 or 0.5+2i")
    p.add_argument("--tol", type=float, default=1e-12)
    add_format(p)
    p.set_defaults(func=cmd_series)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ExpressionError, SpecError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
