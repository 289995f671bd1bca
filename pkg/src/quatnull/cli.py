"""Batch command-line front end.

Every command reads its inputs, prints, and exits; there is no interactive
mode.  Exit codes are part of the contract:

    0  success
    1  usage, parse, or validation error
    2  mathematical negative (non-member, condition fails, no certificate)
    3  certificate verification failure (implementation bug; never silent)
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .groebner import buchberger, is_member
from .nullstellensatz import (
    NotUnitIdealError,
    VerificationFailedError,
    check_scalar_family,
    condition_holds,
    example_suite,
    rabinowitsch_certificate,
    search_N,
)
from .polyring import MonomialOrder, NonCommutingPointError, VariableCountMismatchError, evaluate
from .quaternions import NoRationalUnitPureError
from .textio import (
    ParseError,
    parse_ideal_text,
    parse_point,
    parse_poly,
    parse_quaternion,
    print_poly,
    print_quaternion,
    render_certificate,
    validate_variables,
)


def _split_names(raw: str) -> tuple[str, ...]:
    names = tuple(part.strip() for part in raw.split(",") if part.strip())
    validate_variables(names)
    return names


def _order(args: argparse.Namespace) -> MonomialOrder:
    return MonomialOrder(getattr(args, "order", "degrevlex"))


def _load_ideal(args: argparse.Namespace, variables: tuple[str, ...]):
    with open(args.ideal, "r", encoding="utf-8") as handle:
        text = handle.read()
    gens = parse_ideal_text(text, variables)
    return buchberger(gens, _order(args), nvars=len(variables))


def cmd_eval(args: argparse.Namespace) -> int:
    variables = _split_names(args.vars)
    f = parse_poly(args.poly, variables)
    p = parse_point(args.point)
    print(print_quaternion(evaluate(f, p)))
    return 0


def cmd_gb(args: argparse.Namespace) -> int:
    variables = _split_names(args.vars)
    ideal = _load_ideal(args, variables)
    for t, basis_poly in enumerate(ideal.basis):
        print(print_poly(basis_poly, variables))
        if args.cofactors:
            for j, cof in enumerate(ideal.cofactors[t]):
                print(f"  cofactor[{j}]: {print_poly(cof, variables)}")
    return 0


def cmd_member(args: argparse.Namespace) -> int:
    variables = _split_names(args.vars)
    ideal = _load_ideal(args, variables)
    f = parse_poly(args.poly, variables)
    result = is_member(f, ideal)
    if not result.member:
        print("no")
        return 2
    print("yes")
    for j, cof in enumerate(result.cofactors):
        print(f"cofactor[{j}]: {print_poly(cof, variables)}")
    return 0


def _print_witnesses(report, variables: tuple[str, ...], show_cofactors: bool) -> None:
    for m, w in enumerate(report.witnesses):
        print(f"G[{m}]: {print_poly(w, variables)}")
        if show_cofactors:
            for j, cof in enumerate(report.witness_cofactors[m]):
                print(f"G[{m}].cofactor[{j}]: {print_poly(cof, variables)}")


def cmd_condition(args: argparse.Namespace) -> int:
    variables = _split_names(args.vars)
    ideal = _load_ideal(args, variables)
    f = parse_poly(args.poly, variables)

    if args.scalars is not None:
        scalars = [parse_quaternion(s) for s in args.scalars.split(",") if s.strip()]
        report = check_scalar_family(ideal, f, scalars, args.nmax)
        for outcome in report.outcomes:
            if outcome.holds:
                print(f"scalar {outcome.scalar}: holds (N = {outcome.N})")
            else:
                print(f"scalar {outcome.scalar}: not established for N <= {args.nmax}")
        print(f"note: {report.note}")
        return 0 if all(o.holds for o in report.outcomes) else 2

    if args.scalar is None:
        print("error: a scalar argument or --scalars is required", file=sys.stderr)
        return 1
    a = parse_quaternion(args.scalar)

    if args.n is not None:
        report = condition_holds(ideal, f, a, args.n)
        if report.holds:
            print(f"holds (N = {report.N})")
            _print_witnesses(report, variables, args.cofactors)
            return 0
        print(f"does not hold at N = {report.N}")
        return 2

    found = search_N(ideal, f, a, args.nmax)
    if found is None:
        print(f"not established for any N <= {args.nmax}")
        return 2
    print(f"holds (N = {found.N})")
    _print_witnesses(found, variables, args.cofactors)
    return 0


def cmd_cert(args: argparse.Namespace) -> int:
    variables = _split_names(args.vars)
    ideal = _load_ideal(args, variables)
    f = parse_poly(args.poly, variables)
    a = parse_quaternion(args.scalar)
    try:
        cert = rabinowitsch_certificate(ideal, f, a)
    except NotUnitIdealError as exc:
        print(f"no certificate: {exc}")
        return 2

    if args.format == "doc":
        text = render_certificate(cert, variables)
    else:
        lines = [f"certificate verified: scalar {cert.scalar}, N = {cert.N}"]
        for m, g_m in enumerate(cert.G):
            lines.append(f"G[{m}] = {print_poly(g_m, variables)}")
        lines.append(
            "identity: (a*F)^N = sum of G[m] * (a*F)^(N-m) for m = 0..N"
        )
        text = "\n".join(lines) + "\n"

    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_example(args: argparse.Namespace) -> int:
    report = example_suite()
    for check in report.checks:
        marker = "ok" if check.passed else "FAIL"
        print(f"[{marker}] {check.description}")
    passed = sum(1 for c in report.checks if c.passed)
    print(f"{passed}/{len(report.checks)} checks passed")
    return 0 if report.ok else 2


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_common(sub: argparse.ArgumentParser, order: bool = True) -> None:
    sub.add_argument("--vars", required=True, help="comma-separated variable names")
    if order:
        sub.add_argument(
            "--order",
            choices=("degrevlex", "deglex", "lex"),
            default="degrevlex",
            help="monomial order (default degrevlex)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatnull",
        description="Exact quaternion-polynomial kernel: evaluation, left "
        "Groebner bases, and vanishing certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a polynomial at a commuting point")
    _add_common(p_eval, order=False)
    p_eval.add_argument("poly", help="polynomial expression")
    p_eval.add_argument("point", help="comma-separated quaternion coordinates")
    p_eval.set_defaults(func=cmd_eval)

    p_gb = sub.add_parser("gb", help="left Groebner basis of an ideal file")
    _add_common(p_gb)
    p_gb.add_argument("ideal", help="path to generator file, one polynomial per line")
    p_gb.add_argument(
        "--cofactors", action="store_true",
        help="also print each basis element over the input generators",
    )
    p_gb.set_defaults(func=cmd_gb)

    p_member = sub.add_parser("member", help="left ideal membership with cofactors")
    _add_common(p_member)
    p_member.add_argument("ideal")
    p_member.add_argument("poly")
    p_member.set_defaults(func=cmd_member)

    p_cond = sub.add_parser(
        "condition",
        help="check (aF)^N in I + I(aF) + ... + I(aF)^N",
    )
    _add_common(p_cond)
    p_cond.add_argument("ideal")
    p_cond.add_argument("poly")
    p_cond.add_argument("scalar", nargs="?", help="quaternion literal for a")
    p_cond.add_argument("--n", type=int, default=None, help="check one exponent only")
    p_cond.add_argument(
        "--nmax", type=int, default=8,
        help="search cap when --n is not given (default 8)",
    )
    p_cond.add_argument(
        "--scalars", default=None,
        help="comma-separated scalar family; reports each one",
    )
    p_cond.add_argument(
        "--cofactors", action="store_true", help="print witness cofactors"
    )
    p_cond.set_defaults(func=cmd_condition)

    p_cert = sub.add_parser("cert", help="generate and verify a vanishing certificate")
    _add_common(p_cert)
    p_cert.add_argument("ideal")
    p_cert.add_argument("poly")
    p_cert.add_argument("scalar")
    p_cert.add_argument(
        "--format", choices=("text", "doc"), default="text",
        help="human summary or machine-readable document",
    )
    p_cert.add_argument("-o", "--output", default=None, help="write to file")
    p_cert.set_defaults(func=cmd_cert)

    p_example = sub.add_parser(
        "example", help="run the built-in one-variable worked example"
    )
    p_example.set_defaults(func=cmd_example)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; fold that into our code 1
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NonCommutingPointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VariableCountMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NoRationalUnitPureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VerificationFailedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotUnitIdealError as exc:
        # only reaches here outside cmd_cert's own handling
        print(f"no certificate: {exc}")
        return 2
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
