"""
Oracle - independent ground truth for the planner

Brute force over formula subsets: every subset is intersected into one Büchi
automaton, composed with the transition system on the fly and checked for an
accepting lasso with a classic nested depth-first search.
"""

import itertools
import logging
import time
from typing import Callable, Hashable, Iterable, Iterator, Optional, Sequence

from models.automaton import BuchiAutomaton, Transition, TRUE_GUARD
from models.errors import EmptyIntersectionError, EmptyProductError, OracleCapExceededError, ResourceLimitError
from models.plan_model import Lasso, OracleResult
from models.settings import DEFAULT_MAX_STATES, PlannerSettings
from models.transition_system import MissionSpec, TransitionSystem
from services.scoring import trace_reward
from services.semantics import ltl_eval_lasso
from services.translator import degeneralize, ltl_to_gba


log = logging.getLogger("LTLMVP")

__all__ = [
    "ltl_eval_lasso",
    "universal_automaton",
    "intersect",
    "find_accepting_lasso",
    "automaton_lasso",
    "system_lasso",
    "brute_force_plan",
    "enumerate_lassos",
    "enumerate_words",
    "optimal_subsets",
]


def universal_automaton() -> BuchiAutomaton:
    """One accepting state with a true self-loop"""
    return BuchiAutomaton((0,), 0, (Transition(0, TRUE_GUARD, 0),), frozenset((0,)))


def intersect(bas: Sequence[BuchiAutomaton], max_states: int = DEFAULT_MAX_STATES) -> BuchiAutomaton:
    """
    Büchi automaton for the intersection of the input languages

    States are (component states, counter). The counter moves from j to (j mod n) + 1
    when the j-th component is accepting; accepting states have counter 1 and an
    accepting first component. Only reachable states are built.
    """
    if not bas:
        raise EmptyIntersectionError("Intersection of no automata; use the universal automaton instead")
    n = len(bas)
    initial = (tuple(ba.initial for ba in bas), 1)
    seen = {initial}
    states = [initial]
    transitions = []
    frontier = 0
    while frontier < len(states):
        source = states[frontier]
        frontier += 1
        qs, counter = source
        advanced = counter % n + 1 if qs[counter - 1] in bas[counter - 1].accepting else counter
        for combo in itertools.product(*(ba.successors[q] for q, ba in zip(qs, bas))):
            guard = TRUE_GUARD
            for t in combo:
                guard = guard.conjoin(t.guard)
                if guard is None:
                    break
            if guard is None:
                continue
            target = (tuple(t.target for t in combo), advanced)
            if target not in seen:
                if len(states) >= max_states:
                    raise ResourceLimitError(f"Intersection exceeds the cap of {max_states} states")
                seen.add(target)
                states.append(target)
            transitions.append(Transition(source, guard, target))
    accepting = frozenset(s for s in states if s[1] == 1 and s[0][0] in bas[0].accepting)
    return BuchiAutomaton(tuple(states), initial, tuple(transitions), accepting)


def find_accepting_lasso(
    initial: Hashable,
    successors: Callable[[Hashable], Iterable[Hashable]],
    accepting: Callable[[Hashable], bool],
) -> Optional[Lasso]:
    """
    Nested depth-first search for a reachable accepting cycle

    The inner search starts from accepting states in outer postorder and shares
    its visited set across seeds.

    Returns:
        Lasso whose cycle starts at an accepting state, or None when the
        language from the initial state is empty
    """
    outer_seen = {initial}
    inner_seen: set = set()
    stack = [initial]
    pending = [iter(successors(initial))]
    while stack:
        for succ in pending[-1]:
            if succ not in outer_seen:
                outer_seen.add(succ)
                stack.append(succ)
                pending.append(iter(successors(succ)))
                break
        else:
            state = stack.pop()
            pending.pop()
            if accepting(state):
                cycle = _close_cycle(state, successors, inner_seen)
                if cycle:
                    return Lasso(tuple(stack), tuple(cycle))
    return None


def _close_cycle(seed: Hashable, successors: Callable[[Hashable], Iterable[Hashable]], seen: set) -> list:
    seen.add(seed)
    path = [seed]
    pending = [iter(successors(seed))]
    while path:
        for succ in pending[-1]:
            if succ == seed:
                return path
            if succ not in seen:
                seen.add(succ)
                path.append(succ)
                pending.append(iter(successors(succ)))
                break
        else:
            path.pop()
            pending.pop()
    return []


def automaton_lasso(ba: BuchiAutomaton) -> Optional[Lasso]:
    """Accepting lasso of an automaton graph, ignoring guards that can never fire"""
    return find_accepting_lasso(
        ba.initial,
        lambda q: [t.target for t in ba.successors[q]],
        lambda q: q in ba.accepting,
    )


def system_lasso(ts: TransitionSystem, ba: BuchiAutomaton) -> Optional[Lasso]:
    """Trace of the system accepted by the automaton, reading the label of each source state"""

    def successors(node):
        state, q = node
        targets = ba.step(q, ts.label(state))
        return [(succ, target) for succ in ts.post(state) for target in targets]

    lasso = find_accepting_lasso((ts.initial, ba.initial), successors, lambda node: node[1] in ba.accepting)
    if lasso is None:
        return None
    return Lasso(tuple(s for s, _ in lasso.prefix), tuple(s for s, _ in lasso.cycle))


def brute_force_plan(
    ts: TransitionSystem,
    spec: MissionSpec,
    settings: Optional[PlannerSettings] = None,
) -> OracleResult:
    """
    Maximal reward by checking formula subsets in decreasing reward order

    Ties go to the lexicographically greatest subset over reward-sorted formulas,
    so higher-priority formulas win. The first subset with a trace is optimal.

    Raises:
        OracleCapExceededError: Instance beyond the desk-size caps
    """
    settings = settings or PlannerSettings()
    if len(ts.states) > settings.oracle_max_ts_states:
        raise OracleCapExceededError(
            f"Oracle supports at most {settings.oracle_max_ts_states} system states, got {len(ts.states)}"
        )
    if len(spec) > settings.oracle_max_formulas:
        raise OracleCapExceededError(
            f"Oracle supports at most {settings.oracle_max_formulas} formulas, got {len(spec)}"
        )
    spec.check_alphabet(ts)

    start_time = time.time()
    bas = [degeneralize(ltl_to_gba(f, settings.max_states)) for f in spec.formulas]
    rewards = spec.rewards

    def order(bits: tuple[bool, ...]) -> tuple:
        return (-sum(r for r, chosen in zip(rewards, bits) if chosen), tuple(not b for b in bits))

    subsets = sorted(itertools.product((True, False), repeat=len(bas)), key=order)
    for checked, bits in enumerate(subsets, start=1):
        chosen = [ba for ba, keep in zip(bas, bits) if keep]
        automaton = intersect(chosen, settings.max_states) if chosen else universal_automaton()
        trace = system_lasso(ts, automaton)
        if trace is None:
            continue
        score = trace_reward(ts, spec, trace)
        targeted = tuple(sorted(e.index for e, keep in zip(spec.entries, bits) if keep))
        incidental = tuple(v.index for v in score.verdicts if v.satisfied and v.index not in targeted)
        log.info(
            f"Took {time.time() - start_time:.4f} seconds to check {checked} of {len(subsets)} subsets"
        )
        return OracleResult(
            reward=-order(bits)[0],
            trace=trace,
            targeted=targeted,
            incidental=incidental,
            verdicts=score.verdicts,
            subsets_checked=checked,
        )
    raise EmptyProductError("System has no infinite trace")


def enumerate_lassos(ts: TransitionSystem, max_length: int) -> Iterator[Lasso]:
    """Every lasso of the system with at most max_length distinct positions"""

    def walk(path: list[str]) -> Iterator[Lasso]:
        last = path[-1]
        for idx, state in enumerate(path):
            if ts.has_transition(last, state):
                yield Lasso(tuple(path[:idx]), tuple(path[idx:]))
        if len(path) < max_length:
            for succ in ts.post(last):
                yield from walk(path + [succ])

    yield from walk([ts.initial])


def enumerate_words(
    propositions: Sequence[str],
    max_length: int,
) -> Iterator[tuple[tuple[frozenset[str], ...], tuple[frozenset[str], ...]]]:
    """Every lasso word (prefix, cycle) over 2^propositions with at most max_length letters"""
    letters = [
        frozenset(combo)
        for size in range(len(propositions) + 1)
        for combo in itertools.combinations(sorted(propositions), size)
    ]
    for length in range(1, max_length + 1):
        for word in itertools.product(letters, repeat=length):
            for loop_start in range(length):
                yield word[:loop_start], word[loop_start:]


def optimal_subsets(
    ts: TransitionSystem,
    spec: MissionSpec,
    max_length: int,
) -> tuple[int, set[frozenset[int]]]:
    """
    Best reward over all lassos up to a length bound, with every satisfied
    index set attaining it
    """
    best = -1
    winners: set[frozenset[int]] = set()
    for lasso in enumerate_lassos(ts, max_length):
        score = trace_reward(ts, spec, lasso)
        satisfied = frozenset(score.satisfied_indices)
        if score.reward > best:
            best, winners = score.reward, {satisfied}
        elif score.reward == best:
            winners.add(satisfied)
    return best, winners
