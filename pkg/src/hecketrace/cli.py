"""Command-line front end.

Exit codes: 0 success, 1 parse error, 2 precondition or suite failure,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import coxeter as cx
from .braid import BraidSyntaxError, parse_braid
from .hecke import HeckeElem, LevelError
from .invariant import XRFormError, invariant_X, substitute_xr
from .oracle import OracleError
from .serialize import to_json_obj, to_latex, to_text
from .suites import SUITES
from .symbolic import SCQ, SL, SQ, RatFun, SymbolicError, Var, substitute, substitute_square
from .trace import DEFAULT_MAX_Y, TraceParams, TruncationError, eval_trace, eval_trace_word

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3
MAX_TABLE_N = 4


class ParseError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


_SQUARED = {"q": SQ, "Q": SCQ, "lambda": SL}


def parse_subst(text: str | None) -> list[tuple[str, Fraction]]:
    """Parse ``var=rational,...`` into (name, value) pairs."""
    if not text:
        return []
    out = []
    for item in text.split(","):
        if "=" not in item:
            raise ParseError(f"bad substitution {item!r}; expected var=rational")
        name, val = (s.strip() for s in item.split("=", 1))
        try:
            value = Fraction(val)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {val!r} in substitution") from None
        if name not in _SQUARED:
            try:
                Var.parse(name)
            except ValueError:
                raise ParseError(f"unknown variable {name!r} in substitution") from None
        out.append((name, value))
    return out


def apply_subst(f: RatFun, subst: list[tuple[str, Fraction]]) -> RatFun:
    direct = {}
    for name, value in subst:
        if name in _SQUARED:
            f = substitute_square(f, _SQUARED[name], value)
        else:
            direct[Var.parse(name)] = RatFun.const(value)
    return substitute(f, direct) if direct else f


def _render(f: RatFun, fmt: str):
    if fmt == "json":
        return to_json_obj(f)
    if fmt == "latex":
        return to_latex(f)
    return to_text(f)


def _emit(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _params(args) -> TraceParams:
    return TraceParams(max_y=args.max_y)


def _word(args, text: str):
    return parse_braid(text, args.strands)


# -- subcommands --------------------------------------------------------------------

def cmd_trace(args) -> int:
    w = _word(args, args.word)
    value = apply_subst(eval_trace_word(w, _params(args)), args.subst)
    out = _render(value, args.format)
    _emit(args, json.dumps(out) if args.format == "json" else out)
    return EXIT_OK


def cmd_invariant(args) -> int:
    w = _word(args, args.word)
    res = invariant_X(w, _params(args))
    if args.xr:
        res = substitute_xr(res)
    value = apply_subst(res.value, args.subst)
    xr = apply_subst(res.xr_form, args.subst) if res.xr_form is not None else None
    if args.format == "json":
        obj = {"value": to_json_obj(value), "strands": res.strands, "e": res.exponent_sum}
        if xr is not None:
            obj["xr"] = to_json_obj(xr)
        _emit(args, json.dumps(obj))
    elif args.format == "latex":
        _emit(args, to_latex(xr if xr is not None else value))
    else:
        main = to_text(xr if xr is not None else value)
        _emit(args, f"{main}\nstrands={res.strands} e={res.exponent_sum}")
    return EXIT_OK


def cmd_verify(args) -> int:
    suite = args.suite
    kwargs = {}
    if suite in ("markov", "conj", "skein"):
        if args.count is not None:
            kwargs["count"] = args.count
        kwargs["seed"] = args.seed
    elif suite == "axioms":
        kwargs["n"] = args.n if args.n is not None else 3
        kwargs["seed"] = args.seed
        if args.count is not None:
            kwargs["count"] = args.count
    elif suite == "lemmas":
        if args.n is not None:
            kwargs["max_level"] = args.n
    report = SUITES[suite](**kwargs)
    lines = [f"{report.passed}/{report.total} pass"]
    if report.failures:
        lines.append(f"first counterexample: {report.failures[0]}")
    if args.format == "json":
        _emit(args, json.dumps({"suite": suite, "passed": report.passed,
                                "total": report.total, "failures": report.failures[:1]}))
    else:
        _emit(args, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_PRECONDITION


def block_name(rep: cx.BlockWord, latex: bool = False) -> str:
    """Name of w_C in block notation, e.g. ``t g1 t2 g3``."""
    sub = (lambda i: f"_{{{i}}}") if latex else str
    parts = []
    for i, kind in enumerate(rep.dform):
        if kind == "t":
            parts.append("t" if i == 0 else f"t{sub(i)}")
        elif kind == "g":
            parts.append(f"g{sub(i)}")
    return ("" if latex else " ").join(parts) or "1"


def is_new_class(c: cx.ClassLabel) -> bool:
    """False when w_C already lives one level down (a fixed positive strand)."""
    return c.n == 1 or 1 not in c.positive


def _class_rows(n: int, args):
    params = _params(args)
    for c in cx.conjugacy_classes(n):
        rep = cx.minimal_rep(c)
        value = eval_trace(HeckeElem.basis(rep.perm()), params)
        yield c, rep, apply_subst(value, args.subst)


def cmd_table(args) -> int:
    if not 1 <= args.max_n <= MAX_TABLE_N:
        raise LevelError(f"--max-n must lie in 1..{MAX_TABLE_N}")
    rows = []
    for n in range(1, args.max_n + 1):
        for c, rep, value in _class_rows(n, args):
            flag = "no paper fixture" if len(c.negative) >= 4 else ""
            rows.append((n, c, rep, value, flag))
    if args.format == "json":
        _emit(args, json.dumps([{"n": n, "class": [list(c.negative), list(c.positive)],
                                 "w": block_name(rep), "value": to_json_obj(v),
                                 **({"note": flag} if flag else {})}
                                for n, c, rep, v, flag in rows]))
    elif args.format == "latex":
        out = ["\\[\\begin{array}{cl}"]
        for n in range(1, args.max_n + 1):
            cells = [f"\\tau({block_name(rep, latex=True)})={to_latex(v)}"
                     for m, c, rep, v, _ in rows if m == n and is_new_class(c)]
            out.append(f"B_{{1,{n}}}: & " + ",\\\\\n & ".join(cells) + "\\\\ & \\\\")
        out.append("\\end{array}\\]")
        _emit(args, "\n".join(out))
    else:
        lines = []
        for n, c, rep, v, flag in rows:
            note = f"  [{flag}]" if flag else ""
            lines.append(f"B(1,{n})  {str(c):<16} {block_name(rep):<14} {to_text(v)}{note}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_classes(args) -> int:
    n = args.n
    if not 1 <= n <= cx.MAX_CLASS_LEVEL:
        raise LevelError(f"--n must lie in 1..{cx.MAX_CLASS_LEVEL}")
    rows = []
    for c in cx.conjugacy_classes(n):
        rep = cx.minimal_rep(c)
        rows.append((c, rep))
    if args.format == "json":
        _emit(args, json.dumps([{"class": [list(c.negative), list(c.positive)],
                                 "w": block_name(rep), "letters": list(rep.letters),
                                 "a": rep.a, "b": rep.b} for c, rep in rows]))
    else:
        _emit(args, "\n".join(f"{str(c):<16} {block_name(rep):<14} a={rep.a} b={rep.b}"
                              for c, rep in rows))
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------------

def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--strands", type=int, default=d(None), help="view the word on N strands")
    p.add_argument("--format", choices=("text", "json", "latex"), default=d("text"))
    p.add_argument("--max-y", type=int, default=d(DEFAULT_MAX_Y), dest="max_y",
                   help="largest admissible y-index K")
    p.add_argument("--subst", default=d(None),
                   help="comma-separated var=rational bindings (q, Q, lambda, sq, sQ, sl, z, x, r, yk)")
    p.add_argument("--out", default=d(None), help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hecketrace",
                     description="Markov traces on type-B Hecke algebras and solid-torus link invariants.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("trace", parents=[common], help="trace of a braid word")
    p.add_argument("word")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("invariant", parents=[common], help="normalized invariant X")
    p.add_argument("word")
    p.add_argument("--xr", action="store_true", help="also rewrite in x and r")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="trace values on class representatives")
    p.add_argument("--max-n", type=int, default=MAX_TABLE_N, dest="max_n")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("classes", parents=[common], help="conjugacy classes of W_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_classes)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.subst = parse_subst(args.subst)
        if args.max_y < 1:
            raise ValueError("--max-y must be at least 1")
        return args.func(args)
    except (BraidSyntaxError, ParseError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (XRFormError, OracleError, AssertionError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (LevelError, TruncationError, SymbolicError, ZeroDivisionError, ValueError,
            IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
