"""
Naive reference semantics, written independently of the library's matcher,
multiset and oracle so the two can be checked against each other.

States here are plain sorted tuples; a rule application is computed by
brute force over all ordered tuples of distinct positions.
"""
import itertools
import math
import re

from freechr.program import leaves


def naive_list_delete(values, positions):
    out = list(values)
    for pos in sorted(positions, reverse=True):
        del out[pos]
    return out


def naive_matches(rule, values):
    """All (positions, matched values) for ``rule`` on the list ``values``."""
    heads = list(rule.kept) + list(rule.removed)
    found = []
    for positions in itertools.permutations(range(len(values)), len(heads)):
        picked = [values[i] for i in positions]
        if all(pred.fn(v) for pred, v in zip(heads, picked)) and rule.guard.fn(*picked):
            found.append((positions, picked))
    return found


def naive_successors(program, state):
    """Set of sorted tuples reachable in one rule application."""
    values = sorted(state)
    out = set()
    for rule in leaves(program):
        n = len(rule.kept)
        for positions, picked in naive_matches(rule, values):
            rest = naive_list_delete(values, positions[n:])
            out.add(tuple(sorted(rest + list(rule.body.fn(*picked)))))
    return out


def naive_reachable(program, state, depth):
    """Depth-first enumeration of states derivable in at most ``depth`` steps.

    Keeps the best remaining depth per state so revisits along shorter paths
    are still explored.
    """
    best = {}

    def visit(s, budget):
        if best.get(s, -1) >= budget:
            return
        best[s] = budget
        if budget == 0:
            return
        for t in naive_successors(program, s):
            visit(t, budget - 1)

    visit(tuple(sorted(state)), depth)
    return set(best)


def gcd_of(values):
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g


def dfa_accepts(word):
    """The three-state automaton for a(ba)*, evaluated directly."""
    delta = {("S1", "a"): "S2", ("S1", "b"): "Sfail", ("S2", "a"): "Sfail", ("S2", "b"): "S1"}
    q = "S1"
    for ch in word:
        q = delta.get((q, ch), "Sfail")
    return q == "S2"


def regex_accepts(word):
    return re.fullmatch(r"a(ba)*", word) is not None
