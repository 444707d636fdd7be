"""Command-line front end.

Every subcommand takes a context (``--context "tapes=ab;xy,weights=q"``) and
an expression, given positionally or with ``--expr``.  Exit status is 0 on
success, 1 when the input is rejected and 2 on usage errors.
"""

import argparse
import sys

from . import automaton as am
from .derivative import constant_term, derivative
from .errors import ExpressionError
from .expansion import expansion_of, format_expansion
from .expression import size, size_bound, tape_widths, validate, width
from .labels import Context, format_word
from .oracle import bounded_equiv, series_of
from .polynomial import format_polynomial
from .syntax import parse, to_string

DEFAULT_CONTEXT = "tapes=abcdefghijklmnopqrstuvwxyz,weights=q"


class UsageError(Exception):
    pass


def _expression(args, ctx, name="expr"):
    text = getattr(args, name + "_opt", None) or getattr(args, name, None)
    if text is None:
        raise UsageError("missing expression")
    e = parse(text, ctx)
    validate(e, ctx)
    return e


def cmd_parse(args, ctx, out):
    e = _expression(args, ctx)
    out.write(to_string(e) + "\n")
    out.write("size: {}\n".format(size(e)))
    out.write("width: {} {}\n".format(width(e), tape_widths(e)))


def cmd_expand(args, ctx, out):
    e = _expression(args, ctx)
    out.write(format_expansion(expansion_of(e, ctx.ks), ascii=args.ascii) + "\n")


def cmd_derive(args, ctx, out):
    e = _expression(args, ctx)
    label = ctx.parse_label(args.label)
    out.write("constant term: {}\n".format(constant_term(e, ctx.ks)))
    out.write("derivative wrt {}: {}\n".format(
        format_word(label), format_polynomial(derivative(e, label, ctx.ks), ascii=args.ascii)))


def cmd_automaton(args, ctx, out):
    e = _expression(args, ctx)
    if args.lazy:
        lazy = am.LazyAutomaton(e, ctx)
        words = [w for w in (args.words or "").split(",") if w.strip()]
        for w in words:
            out.write("{}: {}\n".format(w.strip(), lazy.evaluate(ctx.parse_word(w))))
        out.write("materialized states: {}\n".format(lazy.materialized))
        out.write("discovered states: {}\n".format(len(lazy.states)))
        return
    aut = am.derived_term_automaton(e, ctx)
    if args.format == "json":
        out.write(am.to_json(aut) + "\n")
    else:
        out.write(am.to_dot(aut))


def cmd_evaluate(args, ctx, out):
    e = _expression(args, ctx)
    word = ctx.parse_word(args.word)
    out.write("{}\n".format(am.LazyAutomaton(e, ctx).evaluate(word)))


def cmd_derived_terms(args, ctx, out):
    e = _expression(args, ctx)
    terms = sorted(am.derived_terms(e))
    for t in terms:
        out.write(to_string(t) + "\n")
    bound = size_bound(e)
    out.write("count: {} (bound {}, {})\n".format(
        len(terms), bound, "ok" if len(terms) <= bound else "VIOLATED"))


def cmd_equiv(args, ctx, out):
    lhs = _expression(args, ctx, "lhs")
    rhs = _expression(args, ctx, "rhs")
    witness = bounded_equiv(lhs, rhs, ctx.ks, args.bound)
    if witness is None:
        out.write("equal up to gradation {}\n".format(args.bound))
    else:
        s, t = (series_of(x, ctx.ks, args.bound) for x in (lhs, rhs))
        out.write("differ at {}: {} vs {}\n".format(format_word(witness), s[witness], t[witness]))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--context", default=DEFAULT_CONTEXT,
                        help="tape alphabets and semiring (default: %(default)s)")
    common.add_argument("--ascii", action="store_true",
                        help="print (+) and (.) instead of ⊕ and ⊙")

    def with_expr(p):
        p.add_argument("expr", nargs="?")
        p.add_argument("--expr", dest="expr_opt")
        return p

    parser = argparse.ArgumentParser(
        prog="multitape", description="Weighted multitape rational expressions.")
    sub = parser.add_subparsers(dest="command", required=True)

    with_expr(sub.add_parser("parse", parents=[common], help="print the normal form"))
    with_expr(sub.add_parser("expand", parents=[common], help="print the expansion"))
    p = with_expr(sub.add_parser("derive", parents=[common],
                                 help="print the constant term and a derivative"))
    p.add_argument("--label", required=True, help="generator, e.g. 'a|\\e'")
    p = with_expr(sub.add_parser("automaton", parents=[common],
                                 help="build the derived-term automaton"))
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--lazy", action="store_true",
                   help="only build what evaluating --words requires")
    p.add_argument("--words", help="comma-separated words for --lazy")
    p = with_expr(sub.add_parser("evaluate", parents=[common], help="weight of a word"))
    p.add_argument("--word", required=True, help="per-tape words joined by '|'")
    with_expr(sub.add_parser("derived-terms", parents=[common],
                             help="list the true derived terms"))
    p = sub.add_parser("equiv", parents=[common], help="bounded equivalence check")
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("lhs")
    p.add_argument("rhs")
    return parser


COMMANDS = {
    "parse": cmd_parse,
    "expand": cmd_expand,
    "derive": cmd_derive,
    "automaton": cmd_automaton,
    "evaluate": cmd_evaluate,
    "derived-terms": cmd_derived_terms,
    "equiv": cmd_equiv,
}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        ctx = Context.parse(args.context)
    except ValueError as exc:
        err.write("error: bad context: {}\n".format(exc))
        return 2
    try:
        COMMANDS[args.command](args, ctx, out)
    except UsageError as exc:
        err.write("error: {}\n".format(exc))
        return 2
    except (ExpressionError, ValueError) as exc:
        err.write("error: {}\n".format(exc))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
