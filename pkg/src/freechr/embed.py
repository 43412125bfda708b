"""
Printing programs as head-normalized ground CHR rules.

Every head position becomes a fresh variable ``v1 .. v(n+m)`` and all
conditions move into the guard. Functions are rendered from their names:

* a name containing ``$k`` placeholders, or one that is not a plain
  identifier (``"{}"``, ``"0 < $1"``), is raw text whose ``$k`` is replaced
  by the k-th argument variable;
* the literals ``true`` and ``false`` print as themselves;
* any other identifier ``f`` prints as an application ``f(v1, ...)``.

The printed text is only as faithful as those names; the functions themselves
are never inspected.
"""
import re
from dataclasses import dataclass

from freechr.program import NamedFn, Program, Rule, fold

_PLACEHOLDER = re.compile(r"\$(\d+)")
_IDENTIFIER = re.compile(r"[A-Za-z_][\w.]*\Z")
_LITERALS = {"true", "false"}


def render_application(fn: NamedFn, args) -> str:
    name = fn.name
    if _PLACEHOLDER.search(name) or not _IDENTIFIER.match(name):
        def sub(m):
            k = int(m.group(1))
            if not 1 <= k <= len(args):
                raise ValueError(f"placeholder ${k} in {name!r} has no argument (arity {len(args)})")
            return args[k - 1]
        return _PLACEHOLDER.sub(sub, name)
    if name in _LITERALS:
        return name
    return f"{name}({','.join(args)})"


@dataclass(frozen=True)
class CHRRuleText:
    name: str
    kept_vars: tuple
    removed_vars: tuple
    guard_text: str
    body_text: str

    def __str__(self):
        kept = ", ".join(self.kept_vars)
        removed = ", ".join(self.removed_vars)
        head = " ".join(part for part in (kept, "\\", removed) if part)
        return f"{self.name} @ {head} <=> {self.guard_text} | {self.body_text}"


def embed_rule(r: Rule) -> CHRRuleText:
    n = len(r.kept)
    variables = [f"v{i}" for i in range(1, r.arity + 1)]
    conjuncts = [render_application(k, [variables[i]]) for i, k in enumerate(r.kept)]
    conjuncts += [render_application(q, [variables[n + j]]) for j, q in enumerate(r.removed)]
    conjuncts.append(render_application(r.guard, variables))
    return CHRRuleText(
        r.name,
        tuple(variables[:n]),
        tuple(variables[n:]),
        " /\\ ".join(conjuncts),
        render_application(r.body, variables),
    )


def embed(p: Program) -> list:
    return fold(p, lambda r: [embed_rule(r)], lambda a, b: a + b)


def embed_text(p: Program) -> list:
    return [str(t) for t in embed(p)]
