"""Command-line interface.

Exit codes: 0 success (or EQUIV / accepted), 1 negative verdict (DIFFER /
rejected), 2 bad input (parse, kind, width, file or shape errors), 3 the
enumeration guard tripped.
"""

import argparse
import sys

from .errors import EnumerationGuard, ParseError, XFormError
from .expr import evaluate
from .machine import compile_form, run, run_stream
from .parser import load_form, parse, to_text
from .pattern import DEFAULT_CAP, SequenceInstance, check_universe, dumps_pattern, load_pattern
from .synthesis import synthesize

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

_SYNTAX_HELP = """\
form syntax: literals #0110 (leftmost bit is component 1); operators, tightest
first: ! (NOT), . (AND), + (OR), -> (NEXT); parentheses group. NOT and AND only
apply to spatial (Next-free) operands. In .xf files '#!' starts a comment.
"""


class _Fail(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _add_form_args(p, multiple=False):
    action = "append" if multiple else "store"
    if multiple:
        p.add_argument("--form", action=action, default=[], metavar="TEXT", help="inline form (give two)")
        p.add_argument("--form-file", action=action, default=[], metavar="PATH", help=".xf file")
    else:
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--form", metavar="TEXT", help="inline form")
        g.add_argument("--form-file", metavar="PATH", help=".xf file holding one form")


def _add_common(p, lmax_default=None):
    p.add_argument("--interp", choices=("singleton", "mask"), default="singleton")
    if lmax_default is not False:
        p.add_argument("--lmax", type=_positive_int, default=lmax_default, metavar="INT")
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP, metavar="INT",
                   help="enumeration cap in instances (default 2^24)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="xforms",
        description="Objective pattern algebra, X-form synthesis and perception machines.",
        epilog=_SYNTAX_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print the pattern a form denotes")
    _add_form_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("synth", help="synthesize a form from a .pat file")
    p.add_argument("--pattern", required=True, metavar="PATH")
    p.add_argument("--mode", choices=("sx", "tx", "x"), default="x")
    _add_common(p, lmax_default=False)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("check-equiv", help="compare two forms on every sequence up to --lmax")
    _add_form_args(p, multiple=True)
    _add_common(p, lmax_default=4)
    p.set_defaults(func=cmd_check_equiv)

    p = sub.add_parser("compile", help="print perception machine statistics")
    _add_form_args(p)
    _add_common(p, lmax_default=False)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("run", help="run a compiled form over an input sequence")
    _add_form_args(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--input", metavar="SEQ", help='whitespace-separated bitstrings, e.g. "1 0"')
    g.add_argument("--pattern", metavar="PATH", help=".pat file; every sequence is run")
    p.add_argument("--stream", action="store_true", help="report suffix matches at every step")
    _add_common(p, lmax_default=False)
    p.set_defaults(func=cmd_run)
    return parser


def _read_form(args):
    if args.form is not None:
        return parse(args.form)
    return load_form(args.form_file)


def cmd_eval(args, out):
    form = _read_form(args)
    pattern = evaluate(form, args.interp, max_len=args.lmax, cap=args.cap)
    out.write(dumps_pattern(pattern))
    return EXIT_OK


def cmd_synth(args, out):
    target = load_pattern(args.pattern)
    result = synthesize(target, args.mode, args.interp, cap=args.cap)
    out.write(to_text(result.form) + "\n")
    out.write(f"#! exact={'true' if result.exact else 'false'} footing={result.footing_size}\n")
    return EXIT_OK


def cmd_check_equiv(args, out):
    forms = [parse(text) for text in args.form] + [load_form(path) for path in args.form_file]
    if len(forms) != 2:
        raise _Fail(f"check-equiv needs exactly two forms, got {len(forms)}", EXIT_INPUT)
    a, b = forms
    if a.dim != b.dim:
        raise _Fail(f"forms have different dimensions {a.dim} and {b.dim}", EXIT_INPUT)
    check_universe(a.dim, args.lmax, args.cap)
    da = evaluate(a, args.interp, max_len=args.lmax, cap=args.cap)
    db = evaluate(b, args.interp, max_len=args.lmax, cap=args.cap)
    diff = da.instances ^ db.instances
    if not diff:
        out.write("EQUIV\n")
        return EXIT_OK
    witness = min(diff, key=SequenceInstance.sort_key)
    out.write("DIFFER\n")
    out.write(witness.to_text() + "\n")
    return EXIT_NEGATIVE


def cmd_compile(args, out):
    form = _read_form(args)
    m = compile_form(form, args.interp, cap=args.cap)
    for key, value in m.stats().items():
        out.write(f"{key}={value}\n")
    out.write(f"top_bit={m.top_bit}\n")
    return EXIT_OK


def cmd_run(args, out):
    form = _read_form(args)
    m = compile_form(form, args.interp, cap=args.cap)
    if args.input is not None:
        try:
            seqs = [SequenceInstance.parse(args.input)]
        except ValueError as exc:
            raise _Fail(f"bad --input: {exc}", EXIT_INPUT) from None
    else:
        seqs = load_pattern(args.pattern).sorted()
        if not seqs:
            raise _Fail(f"{args.pattern} holds no sequences", EXIT_INPUT)
    for s in seqs:
        if s.dim != m.dim:
            raise _Fail(f"input has dimension {s.dim}, form has {m.dim}", EXIT_INPUT)
    if args.stream:
        for s in seqs:
            out.write(" ".join("true" if v else "false" for v in run_stream(m, s)) + "\n")
        return EXIT_OK
    all_accepted = True
    for i, s in enumerate(seqs):
        if i:
            out.write("\n")
        trace = run(m, s)
        out.write(trace.to_text())
        all_accepted &= trace.accepted
    return EXIT_OK if all_accepted else EXIT_NEGATIVE


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except _Fail as exc:
        err.write(f"error: {exc}\n")
        return exc.code
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except EnumerationGuard as exc:
        err.write(f"error: {exc}\n")
        return EXIT_GUARD
    except (XFormError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
