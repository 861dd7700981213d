"""
Command-line interface.

Every subcommand writes one JSON report to standard output. The exit status
is 0 on success, 2 on malformed input and 3 when a resource cap is hit.
"""

import argparse
import logging
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from metabelian import __version__
from metabelian.axioms.check import check_instance
from metabelian.axioms.classify import classify_ucl
from metabelian.axioms.enumerate import enumerate_axioms
from metabelian.axioms.instance import SCHEMES
from metabelian.constants import (
    DEFAULT_BRANCH_CAP,
    DEFAULT_DEGREE_BOUND,
    DEFAULT_ORACLE_BOUND,
    LANGUAGE_L,
    LANGUAGES,
)
from metabelian.equations.oracle import brute_force_solve
from metabelian.equations.solver import format_point, solve_system
from metabelian.equations.system import parse
from metabelian.exceptions import ConfigurationError, ResourceCapExceeded
from metabelian.geometry.canonical import radical_member
from metabelian.geometry.coordinate import coordinate_algebra, one_variable_kind
from metabelian.geometry.homs import homs_to_fitting
from metabelian.io import parse_extension, parse_module, read_text
from metabelian.lie.context import AlgebraContext, algebra_context
from metabelian.lie.expression import normal_form, parse_lie_polynomial
from metabelian.lie.element import format_element
from metabelian.modcore.presentation import ModulePresentation
from metabelian.report import (
    Report,
    coordinate_payload,
    hom_payload,
    input_digest,
    instance_payload,
    module_payload,
    solution_payload,
    verdict_payload,
)

EXIT_SUCCESS = 0
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_CAP = 3

# (inputs, parameters, result)
Outcome = Tuple[List[str], Dict, Dict]


def _context(args: argparse.Namespace) -> AlgebraContext:
    if args.p is None or args.r is None:
        raise ConfigurationError(f"{args.command} requires --p and --r")
    return algebra_context(args.p, args.r)


def _check_module_header(args: argparse.Namespace, M: ModulePresentation) -> None:
    if args.p is not None and args.p != M.ring.p:
        raise ConfigurationError(f"--p {args.p} disagrees with the file header p = {M.ring.p}")
    if args.r is not None and args.r != M.ring.r:
        raise ConfigurationError(f"--r {args.r} disagrees with the file header r = {M.ring.r}")


def _module_input(args: argparse.Namespace) -> Tuple[str, ModulePresentation]:
    text = read_text(args.file)
    M = parse_module(text)
    _check_module_header(args, M)
    return text, M


def command_nf(args: argparse.Namespace) -> Outcome:
    context = _context(args)
    u = normal_form(args.expression, context)
    parameters = {"p": context.p, "r": context.r}
    return [args.expression], parameters, {"normal_form": format_element(u)}


def command_bracket(args: argparse.Namespace) -> Outcome:
    context = _context(args)
    u = normal_form(args.left, context)
    v = normal_form(args.right, context)
    parameters = {"p": context.p, "r": context.r}
    result = {
        "left": format_element(u),
        "right": format_element(v),
        "bracket": format_element(context.bracket(u, v)),
    }
    return [args.left, args.right], parameters, result


def command_solve(args: argparse.Namespace) -> Outcome:
    context = _context(args)
    text = read_text(args.file)
    S = parse(text, context)
    solution = solve_system(S, branch_cap=args.branch_cap)
    parameters = {
        "p": context.p,
        "r": context.r,
        "arity": S.arity,
        "branch_cap": args.branch_cap,
    }
    result = solution_payload(solution)
    result["verified"] = solution.verify()
    if args.oracle_bound is not None:
        # Cross-check the reconstructed slice against exhaustive search.
        parameters["oracle_bound"] = args.oracle_bound
        reconstructed = set(solution.slice(args.oracle_bound))
        enumerated = set(brute_force_solve(S, args.oracle_bound))
        result["oracle"] = {
            "count": len(enumerated),
            "agrees": reconstructed == enumerated,
        }
    return [text], parameters, result


def command_oracle(args: argparse.Namespace) -> Outcome:
    context = _context(args)
    text = read_text(args.file)
    S = parse(text, context)
    bound = DEFAULT_ORACLE_BOUND if args.oracle_bound is None else args.oracle_bound
    points = brute_force_solve(S, bound)
    parameters = {
        "p": context.p,
        "r": context.r,
        "arity": S.arity,
        "oracle_bound": bound,
    }
    result = {"count": len(points), "points": [format_point(x) for x in points]}
    return [text], parameters, result


def command_classify(args: argparse.Namespace) -> Outcome:
    text = read_text(args.file)
    B = parse_extension(text)
    verdict = classify_ucl(B, args.language, args.r)
    parameters = {
        "p": B.p,
        "n": B.rank,
        "language": args.language,
        "r": B.rank if args.r is None else args.r,
    }
    return [text], parameters, verdict_payload(verdict)


def command_axioms(args: argparse.Namespace) -> Outcome:
    context = _context(args)
    instances = enumerate_axioms(
        args.scheme, args.bound, context, degree_bound=args.degree_bound
    )
    parameters = {
        "p": context.p,
        "r": context.r,
        "scheme": args.scheme,
        "bound": args.bound,
        "degree_bound": args.degree_bound,
    }
    if args.action == "enumerate":
        payload = [instance_payload(instance) for instance in instances]
        return [], parameters, {"count": len(payload), "instances": payload}

    if args.file is None:
        raise ConfigurationError("axioms check requires an extension algebra file")
    text = read_text(args.file)
    B = parse_extension(text)
    parameters["seed"] = args.seed
    checked = []
    for instance in instances:
        record = instance_payload(instance)
        record["holds"] = check_instance(instance, B, seed=args.seed)
        checked.append(record)
    result = {
        "count": len(checked),
        "violated": sum(not record["holds"] for record in checked),
        "instances": checked,
    }
    return [text], parameters, result


def command_coord(args: argparse.Namespace) -> Outcome:
    text, M = _module_input(args)
    gamma = coordinate_algebra(M)
    result = coordinate_payload(gamma)
    if gamma.module.n == 1:
        result["kind"] = one_variable_kind(gamma)
    return [text], {"p": M.ring.p, "r": M.ring.r}, result


def command_radical_member(args: argparse.Namespace) -> Outcome:
    text, M = _module_input(args)
    context = algebra_context(M.ring.p, M.ring.r)
    f = parse_lie_polynomial(args.expression, context)
    result = {"polynomial": f.format(), "member": radical_member(f, M)}
    return [text, args.expression], {"p": M.ring.p, "r": M.ring.r}, result


def command_homs(args: argparse.Namespace) -> Outcome:
    text, M = _module_input(args)
    homs = homs_to_fitting(M, args.bound)
    parameters = {"p": M.ring.p, "r": M.ring.r, "bound": args.bound}
    result = {"count": len(homs), "homs": [hom_payload(hom) for hom in homs]}
    return [text], parameters, result


def command_dim(args: argparse.Namespace) -> Outcome:
    text, M = _module_input(args)
    gamma = coordinate_algebra(M)
    result = {"module": module_payload(M), "dimension": gamma.dimension}
    return [text], {"p": M.ring.p, "r": M.ring.r}, result


COMMANDS: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "nf": command_nf,
    "bracket": command_bracket,
    "solve": command_solve,
    "oracle": command_oracle,
    "classify": command_classify,
    "axioms": command_axioms,
    "coord": command_coord,
    "radical-member": command_radical_member,
    "homs": command_homs,
    "dim": command_dim,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=None, help="prime characteristic")
    common.add_argument("--r", type=int, default=None, help="rank of F_r")
    common.add_argument(
        "--oracle-bound",
        type=int,
        default=None,
        help=f"degree bound of brute-force enumeration (default {DEFAULT_ORACLE_BOUND})",
    )
    common.add_argument(
        "--degree-bound",
        type=int,
        default=DEFAULT_DEGREE_BOUND,
        help="search bound of consistency witnesses",
    )
    common.add_argument(
        "--timing", action="store_true", help="add wall-clock timing to the report"
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug"
    )

    parser = argparse.ArgumentParser(
        prog="metabelian",
        description="Exact computations in free metabelian Lie algebras over GF(p).",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    nf = subparsers.add_parser("nf", parents=[common], help="normal form of an expression")
    nf.add_argument("expression")

    bracket = subparsers.add_parser(
        "bracket", parents=[common], help="normal form of [u, v]"
    )
    bracket.add_argument("left")
    bracket.add_argument("right")

    solve = subparsers.add_parser("solve", parents=[common], help="decide a system")
    solve.add_argument("file", help="system file, one equation per line")
    solve.add_argument("--branch-cap", type=int, default=DEFAULT_BRANCH_CAP)

    oracle = subparsers.add_parser(
        "oracle", parents=[common], help="brute-force roots of a system"
    )
    oracle.add_argument("file", help="system file, one equation per line")

    classify = subparsers.add_parser(
        "classify", parents=[common], help="universal closure membership"
    )
    classify.add_argument("file", help="extension algebra file")
    classify.add_argument("--language", choices=LANGUAGES, default=LANGUAGE_L)

    axioms = subparsers.add_parser(
        "axioms", parents=[common], help="enumerate or check axiom instances"
    )
    axioms.add_argument("action", choices=("enumerate", "check"))
    axioms.add_argument("file", nargs="?", default=None, help="extension algebra file")
    axioms.add_argument("--scheme", choices=SCHEMES, required=True)
    axioms.add_argument("--bound", type=int, default=1)
    axioms.add_argument("--seed", type=int, default=0)

    coord = subparsers.add_parser("coord", parents=[common], help="coordinate algebra")
    coord.add_argument("file", help="module presentation file")

    radical = subparsers.add_parser(
        "radical-member", parents=[common], help="radical membership"
    )
    radical.add_argument("file", help="module presentation file")
    radical.add_argument("expression", help="Lie polynomial in x1..xn")

    homs = subparsers.add_parser(
        "homs", parents=[common], help="homomorphisms into the Fitting radical"
    )
    homs.add_argument("file", help="module presentation file")
    homs.add_argument("--bound", type=int, default=0)

    dim = subparsers.add_parser("dim", parents=[common], help="dimension")
    dim.add_argument("file", help="module presentation file")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s"
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors and 0 on --help / --version.
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR
    _configure_logging(args.verbose)

    start = time.perf_counter()
    try:
        inputs, parameters, result = COMMANDS[args.command](args)
    except ResourceCapExceeded as e:
        print(f"error: resource cap exceeded: {e}", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    elapsed = time.perf_counter() - start

    report = Report(
        command=args.command,
        input_digest=input_digest(inputs),
        parameters=parameters,
        result=result,
        timing=elapsed if args.timing else None,
    )
    sys.stdout.write(report.to_json() + "\n")
    return EXIT_SUCCESS


def main() -> None:
    sys.exit(run())
