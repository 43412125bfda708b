"""
Deterministic execution of programs.

Each rule is turned into a state transformer, and composition picks the
left-most transformer that can step. :func:`compile_program` is the fold of a
program with those two functions, and :func:`run` iterates the compiled
transformer until no rule applies or the step budget runs out.
"""
import enum
import json
from dataclasses import dataclass, field
from typing import Callable, Optional

from freechr.matcher import Match, apply_match, first_match
from freechr.multiset import Multiset
from freechr.program import Program, Rule, fold


@dataclass(frozen=True)
class StepRecord:
    rule_name: str
    match: Match
    pre_state: Multiset
    post_state: Multiset

    def __str__(self):
        return f"{self.rule_name}: {self.pre_state} -> {self.post_state}"


Step = Optional[StepRecord]


@dataclass(frozen=True)
class StateTransformer:
    """Wraps ``step``, which maps a state to a :class:`StepRecord` or ``None``."""

    step: Callable[[Multiset], Step]

    def __call__(self, state: Multiset) -> Step:
        return self.step(state)


def rule_transformer(r: Rule) -> StateTransformer:
    """Fire the first match of ``r``, if there is one."""

    def step(state):
        m = first_match(r, state)
        if m is None:
            return None
        return StepRecord(r.name, m, state, apply_match(r, state, m))

    return StateTransformer(step)


def compose_transformers(t1: StateTransformer, t2: StateTransformer) -> StateTransformer:
    """Left-biased choice: ``t2`` only gets a turn when ``t1`` cannot step."""

    def step(state):
        record = t1(state)
        return record if record is not None else t2(state)

    return StateTransformer(step)


def compile_program(p: Program) -> StateTransformer:
    return fold(p, rule_transformer, compose_transformers)


class RunStatus(enum.Enum):
    FINAL = "final"
    STEP_LIMIT_REACHED = "step-limit-reached"


@dataclass(frozen=True)
class RunResult:
    final_state: Multiset
    trace: tuple = field(default=())
    status: RunStatus = RunStatus.FINAL


def run(p: Program, s0: Multiset, max_steps: int) -> RunResult:
    """Apply the compiled program until a fixed point or ``max_steps`` steps.

    A step whose post-state equals its pre-state still counts, so programs
    that loop in place end with ``STEP_LIMIT_REACHED`` rather than looking
    final.
    """
    if not isinstance(max_steps, int) or max_steps < 1:
        raise ValueError(f"max_steps must be a positive integer, got {max_steps!r}")
    step = compile_program(p)
    state = s0
    trace = []
    while True:
        record = step(state)
        if record is None:
            return RunResult(state, tuple(trace), RunStatus.FINAL)
        if len(trace) == max_steps:
            return RunResult(state, tuple(trace), RunStatus.STEP_LIMIT_REACHED)
        trace.append(record)
        state = record.post_state


def render_trace(result: RunResult) -> list:
    """Text lines: one per step, then the final state and the status."""
    lines = [str(rec) for rec in result.trace]
    lines.append(f"final: {result.final_state}")
    lines.append(f"status: {result.status.value}")
    return lines


def render_trace_records(result: RunResult, encode=lambda x: x) -> list:
    """JSON lines: one object per step, then one summary object.

    ``encode`` turns a domain value into something :mod:`json` can dump.
    """

    def state(s):
        return [encode(x) for x in s]

    lines = [
        json.dumps({"step": i, "rule": rec.rule_name, "pre": state(rec.pre_state), "post": state(rec.post_state)})
        for i, rec in enumerate(result.trace, 1)
    ]
    lines.append(json.dumps({"final": state(result.final_state), "status": result.status.value, "steps": len(result.trace)}))
    return lines
