"""Command line front end: ``menv eval|center|verify|alt|table``.

Exit codes: 0 success, 1 evaluation or domain error, 2 parse error,
3 verification failure.
"""

import argparse
import os
import sys
import time
from itertools import product

from .center import GammaMode, center_generator, center_search
from .core import GENS, DomainError, Element, gamma_eval, mono_str, monomials_box, monomials_up_to
from .document import SchemaError, read_document, serialize
from .expr import ENGINES, ParseError, evaluate, evaluate_alt, parse

EXIT_OK, EXIT_EVAL, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3

# default sweep bound per suite, replaced by --max-exp or MENV_MAX_EXP
SUITE_DEFAULTS = {"oracle": 1, "nalt": 2, "malcev": 0, "alt": 3, "small": 6}


def _mode(text):
    return GammaMode.parse(text)


def _emit(x, mode, fmt, out=None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(serialize(x, mode) + "\n")
    if fmt == "json":
        print(serialize(x, mode))
    else:
        print(x)


def _expression_value(args, evaluator):
    if args.infile:
        if args.expr is not None:
            raise ParseError("give either an expression or --in, not both")
        with open(args.infile, encoding="utf-8") as fh:
            x, doc_mode = read_document(fh.read())
        mode = _mode(args.gamma) if args.gamma else doc_mode
        if not mode.symbolic:
            x = gamma_eval(x, mode.value)
        return x, mode
    if args.expr is None:
        raise ParseError("missing expression")
    mode = _mode(args.gamma)
    return evaluator(parse(args.expr), mode.value), mode


def cmd_eval(args):
    x, mode = _expression_value(args, lambda ast, g: evaluate(ast, args.engine, g))
    _emit(x, mode, args.format, args.out)
    return EXIT_OK


def cmd_alt_eval(args):
    x, mode = _expression_value(args, evaluate_alt)
    _emit(x, mode, args.format, args.out)
    return EXIT_OK


def cmd_center(args):
    mode = _mode(args.gamma)
    basis = center_search(args.max_degree, mode)
    if mode.symbolic:
        print("generator: none (symbolic gamma)")
    else:
        gen = center_generator(mode.value)
        print("generator:", "none, scalars only" if gen is None else mono_str(gen))
    print(f"basis up to degree {args.max_degree}:")
    for x in basis:
        print(serialize(x, mode) if args.format == "json" else f"  {x}")
    return EXIT_OK


def cmd_table(args):
    mode = _mode(args.gamma)
    prod = ENGINES[args.engine]
    monos = monomials_up_to(args.degree)
    for x, z in product(monos, monos):
        value = prod(Element.monomial(x), Element.monomial(z))
        if not mode.symbolic:
            value = gamma_eval(value, mode.value)
        print(f"({mono_str(x)}) * ({mono_str(z)}) = {value}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites


def _suite_oracle(bound):
    from .core import mul_closed
    from .operators import apply, left_op_monomial
    from .oracle import mul_oracle

    monos = monomials_box(bound)
    for x, z in product(monos, monos):
        closed = mul_closed(x, z)
        if mul_oracle(x, z) != closed or apply(left_op_monomial(x), z) != closed:
            return False, f"engines disagree on {x} * {z}"
    return True, f"{len(monos) ** 2} pairs, exponents <= {bound}"


def _suite_nalt(bound):
    from .core import associator

    monos = monomials_up_to(bound)
    count = 0
    for s in GENS:
        g = Element.generator(s)
        for x, y in product(monos, monos):
            X, Y = Element.monomial(x), Element.monomial(y)
            sxy = associator(g, X, Y)
            if sxy + associator(X, g, Y) or associator(X, g, Y) + associator(X, Y, g):
                return False, f"generator {s} fails on {x}, {y}"
            count += 1
    return True, f"{count} triples, degree <= {bound}"


def _suite_malcev(_bound):
    from .core import verify_malcev

    return verify_malcev(), "all basis triples, symbolic gamma"


def _suite_alt(bound):
    from .alternative import alternator_generators_check, quotient_homomorphism_check

    ok = True
    lines = []
    for name, value, expected, matches, vanishes in alternator_generators_check():
        ok &= vanishes and bool(value)
        note = "" if matches else f" (stated value {expected})"
        lines.append(f"{name} = {value}{note}, zero mod J: {vanishes}")
    hom = quotient_homomorphism_check(bound)
    ok &= hom
    lines.append(f"quotient map multiplicative up to degree {bound}: {hom}")
    return ok, "; ".join(lines)


def _suite_small(bound):
    from .alternative import embedding_check, small_alternativity_check, small_ideal_check

    checks = {
        "alternative": small_alternativity_check(bound),
        "embedding": embedding_check(),
        "ideal": small_ideal_check(bound),
    }
    return all(checks.values()), ", ".join(f"{k}: {v}" for k, v in checks.items())


SUITES = {
    "oracle": _suite_oracle,
    "nalt": _suite_nalt,
    "malcev": _suite_malcev,
    "alt": _suite_alt,
    "small": _suite_small,
}


def suite_bound(name, override=None):
    if override is not None:
        return override
    env = os.environ.get("MENV_MAX_EXP")
    if env:
        return int(env)
    return SUITE_DEFAULTS[name]


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        start = time.perf_counter()
        ok, detail = SUITES[name](suite_bound(name, args.max_exp))
        failed |= not ok
        print(f"{'PASS' if ok else 'FAIL'} {name} ({time.perf_counter() - start:.1f}s): {detail}")
    return EXIT_VERIFY if failed else EXIT_OK


# ---------------------------------------------------------------------------


def _add_eval_args(p, engine=True):
    p.add_argument("expr", nargs="?", help="expression, e.g. 'assoc(c, a b, a b)'")
    p.add_argument("--gamma", default=None, help="'symbolic' (default) or a nonzero rational l/m")
    if engine:
        p.add_argument("--engine", choices=sorted(ENGINES), default="closed")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--in", dest="infile", help="read an element document instead of an expression")
    p.add_argument("--out", help="also write the result as an element document")


def build_parser():
    parser = argparse.ArgumentParser(prog="menv", description="Exact arithmetic in U(M_gamma).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression in U(M_gamma)")
    _add_eval_args(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("center", help="center of U(M_gamma) in bounded degree")
    p.add_argument("--gamma", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--max-exp", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("alt", help="the alternative quotient A(M)")
    alt_sub = p.add_subparsers(dest="alt_command", required=True)
    q = alt_sub.add_parser("eval", help="evaluate an expression in A(M)")
    _add_eval_args(q, engine=False)
    q.set_defaults(func=cmd_alt_eval)

    p = sub.add_parser("table", help="all products of monomials up to a degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--gamma", default=None)
    p.add_argument("--engine", choices=sorted(ENGINES), default="closed")
    p.set_defaults(func=cmd_table)
    return parser


def _join_gamma(argv):
    # argparse would read a value like -1/2 as an option
    out = []
    it = iter(argv)
    for arg in it:
        if arg == "--gamma":
            out.append("--gamma=" + next(it, ""))
        else:
            out.append(arg)
    return out


def main(argv=None):
    parser = build_parser()
    argv = _join_gamma(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
