"""
Scoring - reward of a transition-system lasso against a mission specification
"""

from models.errors import InvalidLassoError
from models.plan_model import FormulaVerdict, Lasso, TraceScore
from models.transition_system import MissionSpec, TransitionSystem
from services.semantics import ltl_eval_lasso


def validate_lasso(ts: TransitionSystem, lasso: Lasso):
    """
    Check that a lasso is a trace of the system

    Raises:
        InvalidLassoError: Empty cycle, wrong start, unknown state or broken transition
    """
    if not lasso.cycle:
        raise InvalidLassoError("Lasso has an empty cycle")
    states = lasso.positions()
    for state in states:
        if state not in ts.successors:
            raise InvalidLassoError(f"Unknown state {state}")
    if states[0] != ts.initial:
        raise InvalidLassoError(f"Lasso starts at {states[0]}, not at the initial state {ts.initial}")
    for source, target in zip(states, states[1:]):
        if not ts.has_transition(source, target):
            raise InvalidLassoError(f"No transition {source} -> {target}")
    if not ts.has_transition(lasso.cycle[-1], lasso.cycle[0]):
        raise InvalidLassoError(f"Cycle does not close: no transition {lasso.cycle[-1]} -> {lasso.cycle[0]}")


def trace_reward(ts: TransitionSystem, spec: MissionSpec, lasso: Lasso) -> TraceScore:
    """
    Sum of the rewards of the formulas the lasso's word satisfies

    Args:
        ts: Transition system the lasso runs in
        spec: Prioritized formulas
        lasso: Trace as prefix · cycle^ω of system states

    Returns:
        TraceScore with verdicts in original formula order
    """
    validate_lasso(ts, lasso)
    prefix = [ts.label(s) for s in lasso.prefix]
    cycle = [ts.label(s) for s in lasso.cycle]
    verdicts = tuple(
        FormulaVerdict(e.index, e.text, e.reward, ltl_eval_lasso(e.formula, prefix, cycle))
        for e in spec.original_order()
    )
    return TraceScore(sum(v.reward for v in verdicts if v.satisfied), verdicts)
