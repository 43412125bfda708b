"""
Finding rule matches in a state and applying them.

A match selects ``n + m`` pairwise distinct occurrences of the state, one per
head position (kept heads first, then removed heads). Matches are enumerated
in lexicographic order of their occurrence indices.
"""
from dataclasses import dataclass
from typing import Iterator

from freechr.errors import DomainFunctionError, MalformedMatchError
from freechr.multiset import Multiset
from freechr.program import Rule


@dataclass(frozen=True)
class Match:
    kept_indices: tuple
    removed_indices: tuple
    values: tuple

    @property
    def indices(self) -> tuple:
        return self.kept_indices + self.removed_indices


def _call(rule, role, fn, *args):
    try:
        return fn(*args)
    except Exception as exc:
        raise DomainFunctionError(rule.name, role, exc) from exc


def iter_matches(rule: Rule, state: Multiset) -> Iterator[Match]:
    """Lazily enumerate all matches of ``rule`` in ``state``."""
    heads = rule.kept + rule.removed
    n = len(rule.kept)
    elements = state.elements
    # candidates[j]: occurrences whose value satisfies head predicate j
    candidates = []
    for j, pred in enumerate(heads):
        role = f"kept head {j + 1}" if j < n else f"removed head {j - n + 1}"
        candidates.append([i for i, x in enumerate(elements) if _call(rule, role, pred, x)])
        if not candidates[-1]:
            return

    chosen = []

    def extend(j):
        if j == len(heads):
            values = tuple(elements[i] for i in chosen)
            if _call(rule, "guard", rule.guard, *values):
                yield Match(tuple(chosen[:n]), tuple(chosen[n:]), values)
            return
        for i in candidates[j]:
            if i in chosen:
                continue
            chosen.append(i)
            yield from extend(j + 1)
            chosen.pop()

    yield from extend(0)


def find_matches(rule: Rule, state: Multiset) -> list:
    return list(iter_matches(rule, state))


def first_match(rule: Rule, state: Multiset):
    return next(iter_matches(rule, state), None)


def apply_match(rule: Rule, state: Multiset, match: Match) -> Multiset:
    """Replace the removed occurrences of ``match`` by the rule body."""
    idx = match.indices
    if len(match.kept_indices) != len(rule.kept) or len(match.removed_indices) != len(rule.removed):
        raise MalformedMatchError(f"match does not fit the head of rule {rule.name!r}")
    if len(match.values) != len(idx):
        raise MalformedMatchError("match values and indices differ in length")
    for i, v in zip(idx, match.values):
        if not 0 <= i < len(state) or state[i] != v:
            raise MalformedMatchError(f"stale match: occurrence {i} of {state} is not {v!r}")
    rest = state.remove_occurrences(match.removed_indices)
    if len(set(idx)) != len(idx):
        raise MalformedMatchError("an occurrence fills two head positions")
    produced = _call(rule, "body", rule.body, *match.values)
    return rest.union(produced)
