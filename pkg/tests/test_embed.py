import random
import re
from pathlib import Path

import pytest

from freechr import TRUE, Composition, NamedFn, compose, embed, embed_text, leaves, rule
from freechr.embed import render_application
from freechr.programs import dfa_program, gcd_program, min_program

GOLDEN = Path(__file__).parent / "golden"


def test_gcd_embedding_matches_golden():
    assert embed_text(gcd_program()) == (GOLDEN / "embed_gcd.txt").read_text(encoding="utf-8").splitlines()


def test_gcd_embedding_lines():
    assert embed_text(gcd_program()) == [
        "zero @ \\ v1 <=> v1 = 0 /\\ true | {}",
        "subtract @ v1 \\ v2 <=> 0 < v1 /\\ 0 < v2 /\\ v1 <= v2 | {v2 - v1}",
    ]


def test_min_embedding():
    assert embed_text(min_program()) == ["min @ v1 \\ v2 <=> true /\\ true /\\ v1 <= v2 | {}"]


def test_fields():
    zero, subtract = embed(gcd_program())
    assert zero.kept_vars == () and zero.removed_vars == ("v1",)
    assert subtract.kept_vars == ("v1",) and subtract.removed_vars == ("v2",)
    assert subtract.guard_text == "0 < v1 /\\ 0 < v2 /\\ v1 <= v2"
    assert subtract.body_text == "{v2 - v1}"


def test_identifier_names_print_as_applications():
    r = rule("r", kept=[NamedFn("even", lambda x: x % 2 == 0)], removed=[TRUE],
             guard=NamedFn("ordered", lambda a, b: a <= b), body=NamedFn("merge", lambda a, b: (a + b,)))
    assert embed_text(r) == ["r @ v1 \\ v2 <=> even(v1) /\\ true /\\ ordered(v1,v2) | merge(v1,v2)"]


def test_kept_only_rule_has_no_trailing_space():
    r = rule("p", kept=[TRUE], body=NamedFn("{$1}", lambda x: (x,)))
    assert embed_text(r) == ["p @ v1 \\ <=> true /\\ true | {v1}"]


def test_placeholder_out_of_range():
    with pytest.raises(ValueError):
        render_application(NamedFn("$3 < 1", lambda x: True), ["v1"])


def random_program(rng, depth, counter):
    if depth == 0 or rng.random() < 0.35:
        counter[0] += 1
        n = rng.randint(0, 2)
        m = rng.randint(0 if n else 1, 2)
        return rule(f"r{counter[0]}", [TRUE] * n, [NamedFn("$1 > 0", lambda x: x > 0)] * m,
                    NamedFn("g", lambda *xs: True), NamedFn("{}", lambda *xs: ()))
    return Composition(random_program(rng, depth - 1, counter), random_program(rng, depth - 1, counter))


@pytest.mark.parametrize("seed", range(30))
def test_embedding_laws(seed):
    rng = random.Random(seed)
    counter = [0]
    p, q = random_program(rng, 3, counter), random_program(rng, 3, counter)
    assert embed(compose(p, q)) == embed(p) + embed(q)
    assert len(embed(p)) == len(leaves(p))
    for text in embed(p):
        for v in text.kept_vars + text.removed_vars:
            assert re.search(rf"\b{v}\b", text.guard_text)


def test_embedding_is_association_invariant():
    a, b, c = leaves(dfa_program())[:3]
    from freechr.program import RuleLeaf
    x, y, z = RuleLeaf(a), RuleLeaf(b), RuleLeaf(c)
    assert embed(compose(compose(x, y), z)) == embed(compose(x, compose(y, z)))
    assert embed_text(dfa_program()) == embed_text(dfa_program())
