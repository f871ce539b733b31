"""Command-line frontend.

Subcommands: analyze, verify, cohomology, class, homotopy, builtin.
Structured JSON (sorted keys, schema version field) goes to stdout; a
one-line human summary goes to stderr. Exit codes: 0 success, 2 semantic
failure, 64 parse/usage error, 65 unsupported parameter.

File arguments accept either a path or "builtin:NAME" to use a shipped
fixture (mermin-square, mermin-star, mermin-refined).
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import CW2Complex, InvalidComplex, class_of, cohomology
from .exact_linalg import DimensionMismatch
from .fixtures import FIXTURE_NAMES, builtin_fixture
from .invariants import (
    Cdm,
    CReal,
    KMuD,
    KoSym,
    UnsupportedDegree,
    UnverifiedSolution,
    class_of_solution,
)
from .invariants import homotopy_group as spectrum_homotopy_group
from .lcs import (
    InvalidSystem,
    LinearConstraintSystem,
    SearchBoundExceeded,
    canonical_realization,
    classical_value,
    hypergraph_of,
    scalar_solution,
)
from .operators import OperatorSolution, TargetMismatch, verify_solution

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_PARSE = 64
EXIT_UNSUPPORTED = 65

SCHEMA_VERSION = 1


class ParseError(Exception):
    """Input could not be read or does not match its schema."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _builtin_name(ref):
    return ref[len("builtin:"):] if ref.startswith("builtin:") else None


def _load_lcs(ref) -> LinearConstraintSystem:
    name = _builtin_name(ref)
    if name is not None:
        return _fixture(name).system
    try:
        return LinearConstraintSystem.from_json_dict(_load_json(ref))
    except (KeyError, TypeError, ValueError, InvalidSystem) as exc:
        raise ParseError(f"bad constraint-system file {ref}: {exc}") from exc


def _load_complex(ref) -> CW2Complex:
    name = _builtin_name(ref)
    if name is not None:
        return _fixture(name).realization
    try:
        return CW2Complex.from_json_dict(_load_json(ref))
    except (KeyError, TypeError, ValueError, InvalidComplex) as exc:
        raise ParseError(f"bad complex file {ref}: {exc}") from exc


def _load_solution(ref) -> OperatorSolution:
    name = _builtin_name(ref)
    if name is not None:
        return _fixture(name).solution
    try:
        return OperatorSolution.from_json_dict(_load_json(ref))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad solution file {ref}: {exc}") from exc


def _fixture(name):
    try:
        return builtin_fixture(name)
    except KeyError as exc:
        raise ParseError(str(exc.args[0])) from exc


def _emit(command, payload, summary):
    doc = {"torsionk_schema": SCHEMA_VERSION, "command": command}
    doc.update(payload)
    print(json.dumps(doc, sort_keys=True, indent=2))
    print(summary, file=sys.stderr)


def cmd_analyze(args):
    L = _load_lcs(args.lcs)
    x = scalar_solution(L)
    payload = {
        "d": L.d,
        "variables": list(L.variables),
        "contextual": x is None,
        "scalar_solution": None if x is None else list(x.coordinates),
    }
    try:
        value, maximizer = classical_value(L)
        payload["classical_value"] = {"numerator": value.numerator,
                                      "denominator": value.denominator}
        payload["classical_maximizer"] = list(maximizer.coordinates)
    except SearchBoundExceeded as exc:
        payload["classical_value"] = None
        payload["classical_value_note"] = str(exc)
    H, tau = hypergraph_of(L)
    X = canonical_realization(H, L.d)
    cls = class_of(X, L.d, 2, tau.vector())
    payload["tau_class"] = {
        "coordinates": list(cls.coordinates),
        "group": list(cls.ambient_group.invariant_factors),
        "is_zero": cls.is_zero(),
    }
    summary = ("contextual (no scalar solution)" if x is None
               else f"scalar solution {list(x.coordinates)}")
    if payload["classical_value"] is not None:
        v = payload["classical_value"]
        summary += f"; classical value {v['numerator']}/{v['denominator']}"
    _emit("analyze", payload, summary)
    return EXIT_OK


def cmd_verify(args):
    L = _load_lcs(args.lcs)
    T = _load_solution(args.solution)
    report = verify_solution(L, T)
    _emit("verify", {"report": report.to_json_dict()},
          "all checks pass" if report.ok
          else f"FAIL: constraints {report.failing_constraints()}")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_cohomology(args):
    X = _load_complex(args.cw)
    if args.coeff < 2:
        raise ParseError("--coeff must be >= 2")
    group = cohomology(X, args.coeff, args.deg)
    gens = group.generator_lift
    payload = {
        "degree": args.deg,
        "modulus": args.coeff,
        "invariant_factors": list(group.invariant_factors),
        "order": group.order,
        "generator_cocycles": [] if gens is None
        else [gens.col(j) for j in range(gens.cols)],
    }
    _emit("cohomology", payload,
          f"H^{args.deg} with Z/{args.coeff} coefficients = {group.describe()}")
    return EXIT_OK


def cmd_class(args):
    L = _load_lcs(args.lcs)
    T = _load_solution(args.solution)
    X = _load_complex(args.realization)
    m = args.m if args.m is not None else T.dimension
    try:
        cls = class_of_solution(X, L, T, m)
    except (UnverifiedSolution, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit("class", {"class": cls.to_json_dict()},
          f"class {cls.describe()}; h2 zero: {cls.h2.is_zero()}")
    return EXIT_OK


def cmd_homotopy(args):
    try:
        if args.spectrum == "kmud":
            if args.d is None:
                raise ParseError("--d is required for kmud")
            spec = KMuD(args.d)
        elif args.spectrum == "cdm":
            if args.d is None or args.m is None:
                raise ParseError("--d and --m are required for cdm")
            spec = Cdm(args.d, args.m)
        elif args.spectrum == "kosym":
            spec = KoSym()
        else:  # creal
            if args.m is None:
                raise ParseError("--m is required for creal")
            if args.m % 2 == 1:
                # odd multipliers give zero groups in the supported degrees
                if args.r not in (1, 2):
                    print(f"error: degree {args.r} unsupported for creal",
                          file=sys.stderr)
                    return EXIT_UNSUPPORTED
                payload = {"spectrum": "creal", "m": args.m, "r": args.r,
                           "group": {"exact": True, "invariant_factors": [],
                                     "order": 1}}
                _emit("homotopy", payload, "0")
                return EXIT_OK
            spec = CReal(args.m)
        result = spectrum_homotopy_group(spec, args.r)
    except UnsupportedDegree as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    payload = {"spectrum": args.spectrum, "r": args.r, "group": result.to_json_dict()}
    if args.d is not None:
        payload["d"] = args.d
    if args.m is not None:
        payload["m"] = args.m
    _emit("homotopy", payload, result.describe())
    return EXIT_OK


def cmd_builtin(args):
    fx = _fixture(args.name)
    docs = {
        "lcs": fx.system.to_json_dict(),
        "solution": fx.solution.to_json_dict(),
        "realization": fx.realization.to_json_dict(),
    }
    for doc in docs.values():
        doc["torsionk_schema"] = SCHEMA_VERSION
    if args.emit == "all":
        out = {"torsionk_schema": SCHEMA_VERSION, "name": fx.name}
        out.update(docs)
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print(json.dumps(docs[args.emit], sort_keys=True, indent=2))
    print(f"fixture {fx.name}: {args.emit}", file=sys.stderr)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="torsionk",
                     description="Certify linear constraint systems over Z/d and "
                                 "compute their topological invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="scalar solvability, classical value, "
                                       "and the right-hand-side class")
    p.add_argument("lcs", help="constraint-system JSON file or builtin:NAME")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check an operator solution")
    p.add_argument("lcs", help="constraint-system JSON file or builtin:NAME")
    p.add_argument("--solution", required=True, help="solution JSON file or builtin:NAME")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cohomology", help="cellular cohomology of a 2-complex")
    p.add_argument("cw", help="complex JSON file or builtin:NAME")
    p.add_argument("--coeff", type=int, required=True, help="coefficient modulus k >= 2")
    p.add_argument("--deg", type=int, choices=(1, 2), required=True)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("class", help="class of an operator solution")
    p.add_argument("lcs", help="constraint-system JSON file or builtin:NAME")
    p.add_argument("--solution", required=True)
    p.add_argument("--realization", required=True)
    p.add_argument("--m", type=int, default=None, help="target dimension "
                   "(default: the solution's)")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("homotopy", help="homotopy group of a spectrum")
    p.add_argument("--spectrum", choices=("kmud", "cdm", "kosym", "creal"), required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--r", type=int, required=True, help="degree")
    p.set_defaults(func=cmd_homotopy)

    p = sub.add_parser("builtin", help="emit a shipped fixture as JSON")
    p.add_argument("name", help=f"one of: {', '.join(FIXTURE_NAMES)}")
    p.add_argument("--emit", choices=("lcs", "solution", "realization", "all"),
                   default="all")
    p.set_defaults(func=cmd_builtin)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (TargetMismatch, DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
