"""``ncalg`` command line: every command prints one JSON document.

Exit status is 0 on success, 1 on domain errors and 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import BUILTINS, Element, builtin_quaternion, load_algebra_file, mul
from .conjugation import analyze
from .errors import NcalgError, ParseError
from .identities import verify_identities
from .ncpoly import divide_by, evaluate
from .parse import parse_element, parse_polynomial
from .scan import ScanConfig, newton_root_scan
from .solvers import Sphere, shifted_square, sqrt_conjugation, sqrt_quaternion, sylvester_linear


class UsageError(Exception):
    pass


def _load(source: str):
    if source in BUILTINS:
        return BUILTINS[source]()
    if not os.path.exists(source):
        raise UsageError(f"unknown builtin algebra and no such file: {source!r}")
    return load_algebra_file(source)


def _backend(args, default="rational") -> str:
    return args.backend or default


def _elem(args, alg, text) -> Element:
    return parse_element(text, alg, _backend(args))


def _rootset_json(args, roots) -> dict:
    out = roots.to_json()
    if isinstance(roots, Sphere) and args.samples:
        out["samples"] = [x.to_json() for x in roots.sample(args.samples, args.seed)]
    return out


def cmd_mul(args, alg):
    if len(args.elements) < 2:
        raise UsageError("mul needs at least two elements")
    values = [_elem(args, alg, t) for t in args.elements]
    result = values[0]
    for v in values[1:]:
        result = mul(result, v)
    return result.to_json()


def cmd_eval(args, alg):
    p = parse_polynomial(args.poly, alg, _backend(args))
    return evaluate(p, _elem(args, alg, args.at)).to_json()


def cmd_expand(args, alg):
    p = parse_polynomial(args.poly, alg, _backend(args))
    return {"degree": p.degree, "monomials": [m.to_json() for m in p.canonical_monomials()]}


def cmd_divide(args, alg):
    backend = _backend(args)
    r = parse_polynomial(args.poly, alg, backend)
    d = parse_polynomial(args.by, alg, backend)
    result = divide_by(r, d)
    recomposed = result.recompose()
    if backend == "float":
        ok = recomposed.isclose(r, args.tol or 1e-10)
    else:
        ok = recomposed == r
    return {"divisor": result.divisor.to_json(), "quotient": result.quotient_json(),
            "remainder": result.remainder.to_json(), "recomposes": ok}


def cmd_solve_sqrt(args, alg):
    a = _elem(args, alg, args.a)
    if alg == builtin_quaternion():
        return _rootset_json(args, sqrt_quaternion(a))
    return _rootset_json(args, sqrt_conjugation(analyze(alg), a))


def cmd_solve_shifted(args, alg):
    return _rootset_json(args, shifted_square(_elem(args, alg, args.a)))


def cmd_solve_sylvester(args, alg):
    return _rootset_json(args, sylvester_linear(_elem(args, alg, args.a), _elem(args, alg, args.b)))


def cmd_scan_roots(args, alg):
    p = parse_polynomial(args.poly, alg, _backend(args, "float"))
    cfg = ScanConfig(starts=args.starts, seed=args.seed,
                     residual_tol=args.tol or ScanConfig.residual_tol)
    return [{"root": x.to_json(), "residual": r} for x, r in newton_root_scan(p, cfg)]


def cmd_check_conjugation(args, alg):
    prof = analyze(alg)
    return {"is_unital": prof.is_unital, "is_conjugation_algebra": prof.is_conjugation_algebra,
            "violation": prof.violation}


def cmd_verify_identities(args, alg):
    return verify_identities(alg, args.samples or 100, args.seed)


COMMANDS = {
    "mul": cmd_mul,
    "eval": cmd_eval,
    "expand": cmd_expand,
    "divide": cmd_divide,
    "solve-sqrt": cmd_solve_sqrt,
    "solve-shifted": cmd_solve_shifted,
    "solve-sylvester": cmd_solve_sylvester,
    "scan-roots": cmd_scan_roots,
    "check-conjugation": cmd_check_conjugation,
    "verify-identities": cmd_verify_identities,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", default="quaternion",
                        help="builtin name (quaternion, complex) or path to a JSON spec")
    common.add_argument("--backend", choices=("rational", "float"), default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=0,
                        help="sphere members to list; sample count for verify-identities")
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--json", action="store_true", default=True, help="JSON output (always on)")

    parser = argparse.ArgumentParser(prog="ncalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("mul", parents=[common], help="multiply elements left to right")
    p.add_argument("elements", nargs="+")
    p = sub.add_parser("eval", parents=[common], help="evaluate a polynomial at a point")
    p.add_argument("poly")
    p.add_argument("--at", required=True)
    p = sub.add_parser("expand", parents=[common], help="expand a polynomial expression")
    p.add_argument("poly")
    p = sub.add_parser("divide", parents=[common], help="divide by a degree-1 polynomial")
    p.add_argument("poly")
    p.add_argument("--by", required=True)
    p = sub.add_parser("solve-sqrt", parents=[common], help="solve x^2 = a (quaternions or any algebra with conjugation)")
    p.add_argument("--a", required=True)
    p = sub.add_parser("solve-shifted", parents=[common], help="solve (a + x)^2 = a^2 in H")
    p.add_argument("--a", required=True)
    p = sub.add_parser("solve-sylvester", parents=[common], help="solve ax - xa = b")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p = sub.add_parser("scan-roots", parents=[common], help="multistart Newton root scan")
    p.add_argument("poly")
    p.add_argument("--starts", type=int, default=ScanConfig.starts)
    sub.add_parser("check-conjugation", parents=[common], help="test for an algebra with conjugation")
    sub.add_parser("verify-identities", parents=[common], help="randomized identity suite")
    return parser


def _emit(doc, stream) -> None:
    stream.write(json.dumps(doc) + "\n")


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        alg = _load(args.algebra)
        result = COMMANDS[args.command](args, alg)
    except ParseError as exc:
        _emit({"command": args.command, "error": str(exc), "line": exc.line, "column": exc.column}, stdout)
        return 2
    except UsageError as exc:
        _emit({"command": args.command, "error": str(exc)}, stdout)
        return 2
    except NcalgError as exc:
        _emit({"command": args.command, "error": str(exc)}, stdout)
        return 1
    _emit({"command": args.command, "result": result}, stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
