"""
Exhaustive nondeterministic semantics over small states.

Where the engine commits to one rule and one match, the oracle follows every
applicable rule with every match. A single oracle step is one rule
application; breadth-first closure over such steps yields every state
derivable within a depth bound.
"""
import json
from dataclasses import dataclass

from freechr.matcher import apply_match, iter_matches
from freechr.multiset import Multiset
from freechr.program import Program, leaves


def labelled_successors(p: Program, s: Multiset) -> list:
    """All ``(rule name, successor)`` pairs, duplicates removed, in rule order."""
    seen = set()
    out = []
    for r in leaves(p):
        for m in iter_matches(r, s):
            t = apply_match(r, s, m)
            if (r.name, t) not in seen:
                seen.add((r.name, t))
                out.append((r.name, t))
    return out


def successors(p: Program, s: Multiset) -> frozenset:
    return frozenset(t for _, t in labelled_successors(p, s))


@dataclass(frozen=True)
class ReachabilityReport:
    start: Multiset
    depth_limit: int
    reachable: frozenset
    finals: frozenset
    truncated: bool

    def sorted_states(self) -> list:
        return sorted(self.reachable)

    def render(self) -> list:
        lines = [
            f"start: {self.start}",
            f"depth: {self.depth_limit}",
            f"reachable: {len(self.reachable)}",
            f"truncated: {str(self.truncated).lower()}",
            "finals:",
        ]
        lines += [f"  {s}" for s in sorted(self.finals)]
        lines.append("states:")
        lines += [f"  {s}{'  final' if s in self.finals else ''}" for s in self.sorted_states()]
        return lines

    def render_records(self, encode=lambda x: x) -> str:
        return json.dumps(
            {
                "start": [encode(x) for x in self.start],
                "depth": self.depth_limit,
                "truncated": self.truncated,
                "states": [{"state": [encode(x) for x in s], "final": s in self.finals} for s in self.sorted_states()],
            }
        )


def reachable(p: Program, s0: Multiset, depth: int) -> ReachabilityReport:
    """Every state derivable from ``s0`` in at most ``depth`` rule applications.

    Successors of the last layer are still computed so that finality is known
    for every reported state; ``truncated`` is set when one of them is new.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    seen = {s0}
    finals = set()
    frontier = [s0]
    truncated = False
    for level in range(depth + 1):
        nxt = []
        for s in frontier:
            succ = successors(p, s)
            if not succ:
                finals.add(s)
            for t in succ:
                if t in seen:
                    continue
                if level == depth:
                    truncated = True
                    continue
                seen.add(t)
                nxt.append(t)
        frontier = nxt
        if not frontier:
            break
    return ReachabilityReport(s0, depth, frozenset(seen), frozenset(finals), truncated)


def derivable(p: Program, s: Multiset, target: Multiset, depth: int) -> bool:
    return target in reachable(p, s, depth).reachable
