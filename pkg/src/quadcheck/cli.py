"""Batch-verification command line front end.

Commands:

* ``verify-all``      run every built-in case with its default parameters
* ``verify CASE``     run one built-in case, optionally with ``--param``
* ``custom --F EXPR`` verify the master identity for a user-supplied F(k)
* ``kernel-check``    verify the seed identity on a point or a 5x5 grid

Exit codes: 0 all verifications passed, 1 some comparison failed its
tolerance, 2 usage or expression errors, 3 numerical non-convergence or
divergence detection.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import expr as expr_mod
from .catalog import CATALOG_ORDER, run_case
from .errors import (
    DivergenceError,
    DomainError,
    EvaluationError,
    IntegrandError,
    NonConvergenceError,
    ParameterError,
    ParseError,
    QuadcheckError,
    UnknownCaseError,
)
from .kernel import (
    DEFAULT_TOLERANCE,
    KernelParams,
    TransformFunction,
    VerificationReport,
    detect_schwarz_symmetry,
    verify_master,
    verify_seed,
)
from .quadrature import QuadratureOptions

__all__ = ["main", "main_entry", "parse_complex_literal"]

_USAGE_EXIT = 2
_NUMERIC_EXIT = 3

#: default 5x5 grid for kernel-check: a in [0.3, 3], t in [0.2, 2]
_SEED_GRID_A = (0.3, 0.975, 1.65, 2.325, 3.0)
_SEED_GRID_T = (0.2, 0.65, 1.1, 1.55, 2.0)


def parse_complex_literal(text: str) -> complex:
    """Parse "RE", "RE+IMi" or "IMi" (e.g. "0.7", "1+2i", "-3i")."""
    s = text.strip()
    if not s or any(c.isspace() for c in s):
        raise ParameterError(f"bad complex literal {text!r}")
    try:
        if not s.endswith("i"):
            return complex(float(s), 0.0)
        body = s[:-1]
        split = -1
        for idx in range(len(body) - 1, 0, -1):
            if body[idx] in "+-" and body[idx - 1] not in "eE":
                split = idx
                break
        if split <= 0:
            re_part, im_part = "", body
        else:
            re_part, im_part = body[:split], body[split:]
        if im_part in ("", "+"):
            im_val = 1.0
        elif im_part == "-":
            im_val = -1.0
        else:
            im_val = float(im_part)
        re_val = float(re_part) if re_part else 0.0
        return complex(re_val, im_val)
    except ValueError:
        raise ParameterError(f"bad complex literal {text!r}") from None


def _format_complex(z: complex, digits: int = 9) -> str:
    if z.imag == 0.0:
        return f"{z.real:.{digits}g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.{digits}g}{sign}{abs(z.imag):.{digits}g}i"


def report_record(report: VerificationReport) -> dict:
    """One JSON record per verification, following the fixed schema."""
    return {
        "case": report.case_name,
        "params": {
            name: {"re": value.real, "im": value.imag}
            for name, value in report.params.items()
        },
        "lhs": {"re": report.lhs.real, "im": report.lhs.imag},
        "rhs": {"re": report.rhs.real, "im": report.rhs.imag},
        "abs_diff": report.abs_diff,
        "rel_diff": report.rel_diff,
        "pass": report.passed,
        "evaluations": report.diagnostics.evaluations,
        "truncation": report.diagnostics.truncation_used,
        "experimental": report.experimental,
    }


def _print_table(reports: Sequence[VerificationReport], stream) -> None:
    header = f"{'case':<22} {'params':<28} {'lhs':<26} {'rhs':<26} {'rel_diff':<10} pass"
    print(header, file=stream)
    print("-" * len(header), file=stream)
    for r in reports:
        params = ", ".join(f"{k}={_format_complex(v)}" for k, v in r.params.items())
        flag = "yes" if r.passed else "NO"
        if r.experimental:
            flag += " (experimental)"
        print(
            f"{r.case_name:<22} {params:<28} {_format_complex(r.lhs):<26} "
            f"{_format_complex(r.rhs):<26} {r.rel_diff:<10.2e} {flag}",
            file=stream,
        )
        if r.notes:
            print(f"    note: {r.notes}", file=stream)


def _emit(reports: Sequence[VerificationReport], ns) -> None:
    records = [report_record(r) for r in reports]
    if ns.json_path:
        with open(ns.json_path, "w", encoding="utf-8") as fh:
            json.dump(records, fh, indent=2)
            fh.write("\n")
    if ns.format == "json":
        json.dump(records, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        _print_table(reports, sys.stdout)


def _quad_options(ns) -> QuadratureOptions:
    return QuadratureOptions(
        abs_tol=ns.abs_tol,
        rel_tol=ns.rel_tol,
        max_subdivisions=ns.max_subdivisions,
        initial_truncation=ns.initial_truncation,
        max_truncation=ns.max_truncation,
        window_growth=ns.window_growth,
    )


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE,
                     help="verification tolerance (default 1e-8)")
    sub.add_argument("--json", dest="json_path", metavar="PATH",
                     help="also write the JSON report array to PATH")
    sub.add_argument("--format", choices=("table", "json"), default="table",
                     help="stdout format (default table)")
    defaults = QuadratureOptions()
    sub.add_argument("--abs-tol", type=float, default=defaults.abs_tol,
                     help="quadrature absolute tolerance")
    sub.add_argument("--rel-tol", type=float, default=defaults.rel_tol,
                     help="quadrature relative tolerance")
    sub.add_argument("--max-subdivisions", type=int,
                     default=defaults.max_subdivisions,
                     help="adaptive bisection budget")
    sub.add_argument("--initial-truncation", type=float,
                     default=defaults.initial_truncation,
                     help="first window half-width for unbounded domains")
    sub.add_argument("--max-truncation", type=float,
                     default=defaults.max_truncation,
                     help="largest window half-width")
    sub.add_argument("--window-growth", type=float,
                     default=defaults.window_growth,
                     help="geometric window growth factor")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadcheck",
        description="Numerically verify kernel integral identities.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p_all = commands.add_parser("verify-all", help="run all built-in cases")
    _add_common(p_all)

    p_verify = commands.add_parser("verify", help="run one built-in case")
    p_verify.add_argument("case", help=f"one of: {', '.join(CATALOG_ORDER)}")
    p_verify.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="case parameter as a complex literal, e.g. a=0.7 or a=1+2i",
    )
    _add_common(p_verify)

    p_custom = commands.add_parser(
        "custom", help="verify the master identity for a custom transform"
    )
    p_custom.add_argument("--F", required=True, metavar="EXPR",
                          help="transform F(k), e.g. \"1/(k+2)\"")
    p_custom.add_argument("--a", default="1", metavar="VALUE",
                          help="kernel parameter a (complex literal)")
    _add_common(p_custom)

    p_kernel = commands.add_parser(
        "kernel-check", help="verify the seed identity"
    )
    p_kernel.add_argument("--a", default=None, metavar="VALUE",
                          help="kernel parameter (default: 5x5 grid)")
    p_kernel.add_argument("--t", default=None, metavar="VALUE",
                          help="decay parameter (default: 5x5 grid)")
    _add_common(p_kernel)

    return parser


def _run_verify_all(ns) -> list[VerificationReport]:
    opts = _quad_options(ns)
    return [run_case(cid, None, opts, ns.tol) for cid in CATALOG_ORDER]


def _run_verify(ns) -> list[VerificationReport]:
    opts = _quad_options(ns)
    params = {}
    for item in ns.param:
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise ParameterError(f"--param expects NAME=VALUE, got {item!r}")
        params[name.strip()] = parse_complex_literal(value)
    return [run_case(ns.case, params, opts, ns.tol)]


def _run_custom(ns) -> list[VerificationReport]:
    opts = _quad_options(ns)
    ast = expr_mod.parse(ns.F)
    free = expr_mod.variables(ast)
    if free - {"k"}:
        extra = ", ".join(sorted(free - {"k"}))
        raise ParameterError(
            f"the transform may only use the variable 'k'; found: {extra}"
        )

    def fn(k: complex) -> complex:
        return expr_mod.evaluate(ast, {"k": k})

    transform = TransformFunction(
        fn=fn,
        schwarz_symmetric=detect_schwarz_symmetry(fn),
        name=ns.F,
    )
    params = KernelParams(parse_complex_literal(ns.a))
    return [verify_master(transform, params, opts, ns.tol)]


def _run_kernel_check(ns) -> list[VerificationReport]:
    opts = _quad_options(ns)
    if (ns.a is None) != (ns.t is None):
        raise ParameterError("kernel-check needs both --a and --t, or neither")
    if ns.a is not None:
        a = parse_complex_literal(ns.a)
        t = parse_complex_literal(ns.t)
        if a.imag != 0 or t.imag != 0:
            raise ParameterError("kernel-check takes real a and t")
        return [verify_seed(a.real, t.real, opts, ns.tol)]
    return [
        verify_seed(a, t, opts, ns.tol)
        for a in _SEED_GRID_A
        for t in _SEED_GRID_T
    ]


_HANDLERS = {
    "verify-all": _run_verify_all,
    "verify": _run_verify,
    "custom": _run_custom,
    "kernel-check": _run_kernel_check,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (0, None) else int(code)

    try:
        reports = _HANDLERS[ns.command](ns)
    except (DivergenceError, NonConvergenceError, IntegrandError) as exc:
        print(f"quadcheck: numerical failure: {exc}", file=sys.stderr)
        return _NUMERIC_EXIT
    except (ParseError, ParameterError, UnknownCaseError, EvaluationError,
            DomainError) as exc:
        print(f"quadcheck: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    except QuadcheckError as exc:
        print(f"quadcheck: {exc}", file=sys.stderr)
        return _NUMERIC_EXIT
    except ArithmeticError as exc:
        # overflow or a vanishing denominator in a closed form at exotic
        # parameters; still a numerical failure, never a traceback
        print(f"quadcheck: numerical failure: {exc!r}", file=sys.stderr)
        return _NUMERIC_EXIT

    try:
        _emit(reports, ns)
    except OSError as exc:
        print(f"quadcheck: cannot write report: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    return 0 if all(r.passed for r in reports) else 1


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
