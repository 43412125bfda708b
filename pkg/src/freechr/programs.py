"""Ready-made example programs: Euclid's gcd, minimum, and a small DFA."""
import enum
from typing import NamedTuple

from freechr.program import EMPTY_BODY, TRUE, NamedFn, compose, rule


def gcd_program():
    """Greatest common divisor by repeated subtraction; zeros are dropped."""
    zero = rule("zero", removed=[NamedFn("$1 = 0", lambda n: n == 0)], guard=TRUE, body=EMPTY_BODY)
    subtract = rule(
        "subtract",
        kept=[NamedFn("0 < $1", lambda n: 0 < n)],
        removed=[NamedFn("0 < $1", lambda m: 0 < m)],
        guard=NamedFn("$1 <= $2", lambda n, m: n <= m),
        body=NamedFn("{$2 - $1}", lambda n, m: (m - n,)),
    )
    return compose(zero, subtract)


def min_program():
    """Drop the larger of any two numbers until one is left."""
    return rule(
        "min",
        kept=[TRUE],
        removed=[TRUE],
        guard=NamedFn("$1 <= $2", lambda n, m: n <= m),
        body=EMPTY_BODY,
    )


class DfaState(str, enum.Enum):
    S1 = "S1"
    S2 = "S2"
    SFAIL = "Sfail"

    def __str__(self):
        return self.value


class DfaConstraint(NamedTuple):
    """A remaining input word paired with the automaton state reading it."""

    word: str
    state: DfaState

    def __str__(self):
        return f"({self.word or 'ε'}, {self.state.value})"


def _transition(name, symbol, source, target):
    if symbol is None:
        label = f"state($1) = {source.value}"
        accepts = lambda c: len(c.word) > 0 and c.state is source  # noqa: E731
    else:
        label = f"head($1) = {symbol} /\\ state($1) = {source.value}"
        accepts = lambda c: c.word[:1] == symbol and c.state is source  # noqa: E731
    return rule(
        name,
        removed=[NamedFn(label, accepts)],
        guard=TRUE,
        body=NamedFn(f"{{(tail($1), {target.value})}}", lambda c: (DfaConstraint(c.word[1:], target),)),
    )


def dfa_program():
    """Automaton for ``a(ba)*``: a word is accepted when it ends as ``(ε, S2)``."""
    S1, S2, FAIL = DfaState.S1, DfaState.S2, DfaState.SFAIL
    return compose(
        _transition("a_s1", "a", S1, S2),
        _transition("b_s1", "b", S1, FAIL),
        _transition("a_s2", "a", S2, FAIL),
        _transition("b_s2", "b", S2, S1),
        _transition("any_fail", None, FAIL, FAIL),
    )


PROGRAMS = {
    "gcd": gcd_program,
    "min": min_program,
    "dfa": dfa_program,
}
