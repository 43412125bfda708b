"""
Programs as a free algebra: rule leaves joined by composition nodes.

A program is either a :class:`RuleLeaf` or a :class:`Composition` of two
programs. :func:`fold` is the structural recursion over that tree; every
interpretation of a program (execution, embedding, counting rules) is a fold
with a suitable pair of leaf and node functions.
"""
from dataclasses import dataclass
from typing import Any, Callable, Sequence, TypeVar, Union

from freechr.errors import ProgramConstructionError

A = TypeVar("A")


@dataclass(frozen=True)
class NamedFn:
    """A pure host function together with the name it is printed under.

    Head predicates take one value; guards and bodies take all matched values
    as positional arguments, kept before removed.
    """

    name: str
    fn: Callable[..., Any]

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ProgramConstructionError("a NamedFn needs a non-empty name")
        if not callable(self.fn):
            raise ProgramConstructionError(f"{self.name!r} is not callable")

    def __call__(self, *args):
        return self.fn(*args)


def named(fn_or_name, fn=None) -> NamedFn:
    """Coerce to :class:`NamedFn`.

    ``named(f)`` wraps a plain function under its ``__name__``;
    ``named("n = 0", f)`` attaches an explicit display name.
    """
    if fn is not None:
        return NamedFn(fn_or_name, fn)
    if isinstance(fn_or_name, NamedFn):
        return fn_or_name
    return NamedFn(getattr(fn_or_name, "__name__", "") or repr(fn_or_name), fn_or_name)


@dataclass(frozen=True)
class Rule:
    name: str
    kept: tuple
    removed: tuple
    guard: NamedFn
    body: NamedFn

    @property
    def arity(self) -> int:
        return len(self.kept) + len(self.removed)


@dataclass(frozen=True)
class RuleLeaf:
    rule: Rule


@dataclass(frozen=True)
class Composition:
    left: "Program"
    right: "Program"


Program = Union[RuleLeaf, Composition]


def _always_true(*_):
    return True


def _nothing(*_):
    return ()


TRUE = NamedFn("true", _always_true)
EMPTY_BODY = NamedFn("{}", _nothing)


def rule(name: str, kept: Sequence = (), removed: Sequence = (), guard=TRUE, body=EMPTY_BODY) -> RuleLeaf:
    """Build a single-rule program.

    Predicates, guard and body may be :class:`NamedFn` values or plain
    callables (named after ``__name__``).
    """
    if not isinstance(name, str) or not name:
        raise ProgramConstructionError("rule names must be non-empty strings")
    kept = tuple(named(k) for k in kept)
    removed = tuple(named(r) for r in removed)
    if not kept and not removed:
        raise ProgramConstructionError(f"rule {name!r} has an empty head")
    return RuleLeaf(Rule(name, kept, removed, named(guard), named(body)))


def compose(p: Program, q: Program, *more: Program) -> Program:
    """Compose programs left to right; ``compose(a, b, c)`` nests to the left."""
    result = _compose2(p, q)
    for r in more:
        result = _compose2(result, r)
    return result


def _compose2(p, q):
    for side in (p, q):
        if not isinstance(side, (RuleLeaf, Composition)):
            raise ProgramConstructionError(f"cannot compose {side!r}: not a program")
    taken = set(rule_names(p))
    clash = [n for n in rule_names(q) if n in taken]
    if clash:
        raise ProgramConstructionError(f"duplicate rule name {clash[0]!r} in composition")
    return Composition(p, q)


def fold(p: Program, rho: Callable[[Rule], A], nu: Callable[[A, A], A]) -> A:
    """The catamorphism: replace every leaf by ``rho`` and every node by ``nu``."""
    match p:
        case RuleLeaf(r):
            return rho(r)
        case Composition(left, right):
            return nu(fold(left, rho, nu), fold(right, rho, nu))
    raise TypeError(f"not a program: {p!r}")


def leaves(p: Program) -> list:
    """The rules of ``p`` in left-to-right order."""
    return fold(p, lambda r: [r], lambda a, b: a + b)


def rule_names(p: Program) -> list:
    return [r.name for r in leaves(p)]


def count_rules(p: Program) -> int:
    return fold(p, lambda r: 1, lambda a, b: a + b)
