"""
Command-line runner for the example programs.

    freechr run gcd "{4, 6}" --max-steps 100
    freechr oracle gcd "{4, 6}" --depth 10
    freechr embed gcd            (or: freechr --embed gcd)

Exit status: 0 on a final state or a complete report, 2 when the step limit
or depth limit cut the computation short, 1 on usage, parse or domain errors.
"""
import argparse
import re
import sys

from freechr import engine, oracle
from freechr.embed import embed_text
from freechr.errors import FreeCHRError
from freechr.multiset import Multiset
from freechr.programs import PROGRAMS, DfaConstraint, DfaState

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCOMPLETE = 2


class StateParseError(FreeCHRError, ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


_TOKEN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z_ε"][\wε"]*)|(?P<punct>[{}(),]))')
_DFA_STATES = {s.value: s for s in DfaState}


class _Tokens:
    """Cursor over ``(kind, text, position)`` triples of a state literal."""

    def __init__(self, literal):
        self.items = []
        pos = 0
        while literal[pos:].strip():
            m = _TOKEN.match(literal, pos)
            if m is None:
                bad = pos + len(literal[pos:]) - len(literal[pos:].lstrip())
                raise StateParseError(f"unexpected character {literal[bad]!r}", bad)
            self.items.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
            pos = m.end()
        self.items.append((None, "end of input", len(literal)))
        self.i = 0

    def peek(self):
        return self.items[self.i]

    def take(self):
        tok = self.items[self.i]
        self.i = min(self.i + 1, len(self.items) - 1)
        return tok

    def expect(self, text):
        kind, found, pos = self.take()
        if found != text or kind is None:
            raise StateParseError(f"expected {text!r}, found {found!r}", pos)


def _parse_int(tokens):
    kind, text, pos = tokens.take()
    if kind != "int":
        raise StateParseError(f"expected a non-negative integer, found {text!r}", pos)
    return int(text)


def _parse_dfa(tokens):
    tokens.expect("(")
    word = ""
    kind, text, pos = tokens.peek()
    if kind == "word":
        tokens.take()
        if text not in ("ε", '""'):
            if not re.fullmatch(r"[ab]+", text):
                raise StateParseError(f"word {text!r} is not over the alphabet {{a, b}}", pos)
            word = text
    tokens.expect(",")
    kind, text, pos = tokens.take()
    if text not in _DFA_STATES or kind != "word":
        raise StateParseError(f"expected one of {', '.join(_DFA_STATES)}, found {text!r}", pos)
    tokens.expect(")")
    return DfaConstraint(word, _DFA_STATES[text])


_ELEMENT_PARSERS = {"gcd": _parse_int, "min": _parse_int, "dfa": _parse_dfa}


def parse_state(program_name, literal):
    """Parse ``{}`` or ``{e1, e2, ...}`` into a multiset of the program's domain.

    Whitespace is ignored. Integers are non-negative; DFA elements are
    ``(word, STATE)`` where the empty word may be written as nothing, ``ε``
    or ``""``.
    """
    if program_name not in _ELEMENT_PARSERS:
        raise FreeCHRError(f"unknown program {program_name!r}")
    parse_element = _ELEMENT_PARSERS[program_name]
    tokens = _Tokens(literal)
    tokens.expect("{")
    elements = []
    if tokens.peek()[1] != "}":
        elements.append(parse_element(tokens))
        while tokens.peek()[1] == ",":
            tokens.take()
            elements.append(parse_element(tokens))
    tokens.expect("}")
    kind, text, pos = tokens.peek()
    if kind is not None:
        raise StateParseError(f"unexpected {text!r} after the closing brace", pos)
    return Multiset(elements)


def encode(value):
    """JSON form of a domain value."""
    if isinstance(value, DfaConstraint):
        return [value.word, value.state.value]
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return n


def _non_negative(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return n


def build_parser():
    parser = _Parser(prog="freechr", description="Run, explore and print the example CHR programs.")
    parser.add_argument("--embed", metavar="PROGRAM", choices=sorted(PROGRAMS), help="alias for the embed subcommand")
    sub = parser.add_subparsers(dest="mode", parser_class=_Parser)

    p_run = sub.add_parser("run", help="execute a program deterministically and print its trace")
    p_run.add_argument("program", choices=sorted(PROGRAMS))
    p_run.add_argument("state")
    p_run.add_argument("--max-steps", type=_positive, required=True)
    p_run.add_argument("--format", choices=("text", "structured"), default="text")

    p_oracle = sub.add_parser("oracle", help="enumerate every derivable state up to a depth")
    p_oracle.add_argument("program", choices=sorted(PROGRAMS))
    p_oracle.add_argument("state")
    p_oracle.add_argument("--depth", type=_non_negative, required=True)
    p_oracle.add_argument("--format", choices=("text", "structured"), default="text")

    p_embed = sub.add_parser("embed", help="print the program as CHR rules")
    p_embed.add_argument("program", choices=sorted(PROGRAMS))
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.embed is not None:
        if args.mode is not None:
            parser.error("--embed cannot be combined with a subcommand")
        args.mode, args.program = "embed", args.embed
    if args.mode is None:
        parser.error("a subcommand (run, oracle, embed) or --embed is required")

    program = PROGRAMS[args.program]()
    try:
        if args.mode == "embed":
            for line in embed_text(program):
                print(line, file=stdout)
            return EXIT_OK

        state = parse_state(args.program, args.state)
        if args.mode == "run":
            result = engine.run(program, state, args.max_steps)
            if args.format == "text":
                lines = engine.render_trace(result)
            else:
                lines = engine.render_trace_records(result, encode)
            for line in lines:
                print(line, file=stdout)
            return EXIT_OK if result.status is engine.RunStatus.FINAL else EXIT_INCOMPLETE

        report = oracle.reachable(program, state, args.depth)
        if args.format == "text":
            for line in report.render():
                print(line, file=stdout)
        else:
            print(report.render_records(encode), file=stdout)
        return EXIT_INCOMPLETE if report.truncated else EXIT_OK
    except FreeCHRError as exc:
        print(f"freechr: error: {exc}", file=stderr)
        return EXIT_ERROR


def entry_point():
    sys.exit(main())
