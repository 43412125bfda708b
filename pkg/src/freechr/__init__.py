"""Constraint Handling Rules as composable Python values.

Programs are built from :func:`rule` and :func:`compose`, executed with
:func:`run`, explored exhaustively with :func:`reachable`, and printed as CHR
text with :func:`embed`.
"""
from freechr.embed import CHRRuleText, embed, embed_text
from freechr.engine import (
    RunResult,
    RunStatus,
    StateTransformer,
    StepRecord,
    compile_program,
    compose_transformers,
    rule_transformer,
    run,
)
from freechr.errors import DomainFunctionError, FreeCHRError, MalformedMatchError, ProgramConstructionError
from freechr.matcher import Match, apply_match, find_matches
from freechr.multiset import Multiset
from freechr.oracle import ReachabilityReport, derivable, reachable, successors
from freechr.program import (
    EMPTY_BODY,
    TRUE,
    Composition,
    NamedFn,
    Rule,
    RuleLeaf,
    compose,
    count_rules,
    fold,
    leaves,
    named,
    rule,
    rule_names,
)
