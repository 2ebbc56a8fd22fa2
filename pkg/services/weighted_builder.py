"""
Weighted Builder - layered weighted Büchi automaton, weighted product, run fragments
"""

import itertools
import logging
import time
from collections import deque
from typing import Callable, Optional, Sequence

from models.automaton import GeneralizedBuchiAutomaton, TransitionGuard, TRUE_GUARD
from models.errors import (
    BlockingAutomatonError, MalformedRunError, ModelValidationError,
    NonAcceptingRunError, ResourceLimitError, RewardsNotSortedError,
)
from models.plan_model import Fragment
from models.settings import DEFAULT_MAX_STATES
from models.transition_system import TransitionSystem
from models.weighted_model import (
    HUB, ComponentTag, WeightedBuchiAutomaton, WeightedProductAutomaton, WeightedTransition,
)
from services.translator import is_nonblocking


log = logging.getLogger("LTLMVP")


def _target_tags(
    tag: ComponentTag,
    qs: tuple,
    gbas: Sequence[GeneralizedBuchiAutomaton],
    rewards: Sequence[int],
) -> list[tuple[ComponentTag, int]]:
    """Component moves allowed from a state, with the weight they earn"""
    n = len(gbas)
    if tag.is_hub:
        return [(HUB, 0)] + [(ComponentTag(j, 1), rewards[j - 1]) for j in range(1, n + 1)]
    j, l = tag.layer, tag.component
    gba = gbas[j - 1]
    if qs[j - 1] not in gba.acceptance[l - 1]:
        return [(tag, 0)]
    if l < gba.acceptance_count:
        return [(ComponentTag(j, l + 1), 0)]
    # Layer completed: jump to a strictly later layer or return to the hub
    jumps = [(ComponentTag(k, 1), rewards[k - 1]) for k in range(j + 1, n + 1)]
    return jumps + [(HUB, 0)]


def build_weighted_ba(
    gbas: Sequence[GeneralizedBuchiAutomaton],
    rewards: Sequence[int],
    max_states: int = DEFAULT_MAX_STATES,
) -> WeightedBuchiAutomaton:
    """
    Build the reachable part of the layered weighted Büchi automaton

    Args:
        gbas: Non-blocking GBAs, one per formula, in reward order
        rewards: Non-increasing rewards aligned with gbas
        max_states: Resource cap on materialized states

    Returns:
        WeightedBuchiAutomaton with breadth-first state ids, 0 initial
    """
    if len(gbas) != len(rewards):
        raise ModelValidationError(f"{len(gbas)} automata but {len(rewards)} rewards")
    if any(a < b for a, b in zip(rewards, rewards[1:])):
        raise RewardsNotSortedError(f"Rewards must be non-increasing, got {list(rewards)}")
    for idx, gba in enumerate(gbas):
        if not is_nonblocking(gba):
            raise BlockingAutomatonError(f"Automaton {idx} is blocking; complete it first")

    start_time = time.time()
    initial = (tuple(g.initial for g in gbas), HUB)
    ids = {initial: 0}
    states = [initial]
    transitions: list[WeightedTransition] = []
    moves_cache: dict[tuple, list[tuple[TransitionGuard, tuple]]] = {}

    queue = deque([0])
    while queue:
        source = queue.popleft()
        qs, tag = states[source]
        moves = moves_cache.get(qs)
        if moves is None:
            moves = _joint_moves(qs, gbas)
            moves_cache[qs] = moves
        seen: set[tuple[TransitionGuard, int]] = set()
        for target_tag, weight in _target_tags(tag, qs, gbas, rewards):
            for guard, targets in moves:
                key = (targets, target_tag)
                target = ids.get(key)
                if target is None:
                    if len(states) >= max_states:
                        raise ResourceLimitError(
                            f"Weighted automaton exceeds the cap of {max_states} states"
                        )
                    target = len(states)
                    ids[key] = target
                    states.append(key)
                    queue.append(target)
                if (guard, target) in seen:
                    continue
                seen.add((guard, target))
                transitions.append(WeightedTransition(source, guard, target, weight))

    wba = WeightedBuchiAutomaton(
        tuple(states), tuple(transitions), tuple(rewards), tuple(g.acceptance_count for g in gbas)
    )
    log.info(
        f"Took {time.time() - start_time:.4f} seconds to build weighted automaton "
        f"({len(states)} states, {len(transitions)} transitions, {len(wba.components())} components)"
    )
    return wba


def _joint_moves(qs: tuple, gbas: Sequence[GeneralizedBuchiAutomaton]) -> list[tuple[TransitionGuard, tuple]]:
    """Synchronous component moves with their conjoined guard; contradictory ones dropped"""
    per_component = [gba.successors[q] for q, gba in zip(qs, gbas)]
    moves: dict[tuple[TransitionGuard, tuple], None] = {}
    for combo in itertools.product(*per_component):
        guard: Optional[TransitionGuard] = TRUE_GUARD
        for t in combo:
            guard = guard.conjoin(t.guard)
            if guard is None:
                break
        if guard is None:
            continue
        moves.setdefault((guard, tuple(t.target for t in combo)), None)
    return list(moves)


def build_product(
    ts: TransitionSystem,
    wba: WeightedBuchiAutomaton,
    total_reward: Optional[int] = None,
    max_states: int = DEFAULT_MAX_STATES,
) -> WeightedProductAutomaton:
    """
    Reachable weighted product of a transition system and a weighted automaton

    ((s, q), (s', q')) is a transition when s -> s' in the system and some guard
    on q -> q' matches the label of s; it inherits that automaton transition's weight.
    """
    undeclared = wba.propositions - set(ts.propositions)
    if undeclared:
        raise ModelValidationError(f"Automaton uses propositions {sorted(undeclared)} the model does not declare")

    start_time = time.time()
    initial = (ts.initial, wba.initial)
    ids = {initial: 0}
    states = [initial]
    successors: list[dict[int, int]] = []

    frontier = 0
    while frontier < len(states):
        s, b = states[frontier]
        frontier += 1
        label = ts.label(s)
        enabled: dict[int, int] = {}
        for t in wba.successors[b]:
            if t.target not in enabled and t.guard.matches(label):
                enabled[t.target] = t.weight
        out: dict[int, int] = {}
        for s_next in ts.post(s):
            for b_next in sorted(enabled):
                key = (s_next, b_next)
                target = ids.get(key)
                if target is None:
                    if len(states) >= max_states:
                        raise ResourceLimitError(f"Product exceeds the cap of {max_states} states")
                    target = len(states)
                    ids[key] = target
                    states.append(key)
                out[target] = enabled[b_next]
        successors.append(out)

    product = WeightedProductAutomaton(
        states=tuple(states),
        successors=tuple(tuple(sorted(out.items())) for out in successors),
        tags=tuple(wba.tag(b) for _, b in states),
        total_reward=sum(wba.rewards) if total_reward is None else total_reward,
    )
    log.info(
        f"Took {time.time() - start_time:.4f} seconds to build product "
        f"({len(product)} states, {product.transition_count} transitions)"
    )
    return product


WeightFn = Callable[[int, int], Optional[int]]


def fragments(run: Sequence, accepting: Callable[[object], bool], weight: WeightFn) -> list[Fragment]:
    """
    Maximal segments between consecutive accepting positions of a finite run

    Args:
        run: State sequence
        accepting: Acceptance predicate
        weight: Transition weight, None when the pair is not a transition

    Returns:
        Fragments with inclusive start/end positions and summed weight
    """
    if not run:
        raise MalformedRunError("Run is empty")
    marks = [idx for idx, state in enumerate(run) if accepting(state)]
    result = []
    for start, end in zip(marks, marks[1:]):
        total = 0
        for k in range(start, end):
            w = weight(run[k], run[k + 1])
            if w is None:
                raise MalformedRunError(f"No transition {run[k]!r} -> {run[k + 1]!r} at position {k}")
            total += w
        result.append(Fragment(start, end, total))
    return result


def cycle_fragments(cycle: Sequence, accepting: Callable[[object], bool], weight: WeightFn) -> list[Fragment]:
    """Fragments of a lasso cycle; the accepting root closes the last fragment and opens the first"""
    if not cycle:
        raise MalformedRunError("Cycle is empty")
    if not accepting(cycle[0]):
        raise MalformedRunError(f"Cycle must start at an accepting state, got {cycle[0]!r}")
    return fragments(list(cycle) + [cycle[0]], accepting, weight)


def run_reward(cycle: Sequence, accepting: Callable[[object], bool], weight: WeightFn) -> int:
    """
    Reward of a lasso run: the maximal fragment weight occurring infinitely often

    Only the cycle matters; prefix fragments occur once.
    """
    roots = [idx for idx, state in enumerate(cycle) if accepting(state)]
    if not roots:
        raise NonAcceptingRunError("Cycle never visits an accepting state")
    rotated = list(cycle[roots[0]:]) + list(cycle[:roots[0]])
    return max(f.weight for f in cycle_fragments(rotated, accepting, weight))


def product_run_reward(product: WeightedProductAutomaton, cycle: Sequence[int]) -> int:
    return run_reward(cycle, product.is_accepting, product.weight)
