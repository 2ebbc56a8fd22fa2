"""
LTL Translator - formula to generalized Büchi automaton

On-the-fly tableau expansion over the negation normal form. A state is the pair
(obligations for the next position, untils postponed at the current position);
there is one acceptance set per until subformula holding the states where that
until is not postponed.
"""

import logging
import time
from typing import Hashable, Optional, Sequence

import networkx as nx

from models.automaton import (
    BuchiAutomaton, GeneralizedBuchiAutomaton, Transition, TransitionGuard, TRUE_GUARD,
)
from models.errors import EmptyCycleError, ResourceLimitError
from models.formula import And, Atom, Formula, Next, Not, Top, Until
from models.settings import DEFAULT_MAX_STATES


log = logging.getLogger("LTLMVP")

# Negation normal form nodes are plain tuples:
#   ("tt",) ("ff",) ("lit", name, positive) ("and", a, b) ("or", a, b)
#   ("X", a) ("U", a, b) ("R", a, b)
Nnf = tuple
TT: Nnf = ("tt",)
FF: Nnf = ("ff",)


def to_nnf(formula: Formula, negated: bool = False) -> Nnf:
    """Push negations down to the literals, introducing or and release"""
    if isinstance(formula, Top):
        return FF if negated else TT
    if isinstance(formula, Atom):
        return ("lit", formula.name, not negated)
    if isinstance(formula, Not):
        return to_nnf(formula.child, not negated)
    if isinstance(formula, And):
        left, right = to_nnf(formula.left, negated), to_nnf(formula.right, negated)
        return ("or", left, right) if negated else ("and", left, right)
    if isinstance(formula, Next):
        return ("X", to_nnf(formula.child, negated))
    if isinstance(formula, Until):
        left, right = to_nnf(formula.left, negated), to_nnf(formula.right, negated)
        return ("R", left, right) if negated else ("U", left, right)
    raise TypeError(f"Unknown formula node: {type(formula).__name__}")


def _untils(node: Nnf, found: dict[Nnf, None]):
    if node[0] == "U":
        found.setdefault(node, None)
    for child in node[1:]:
        if isinstance(child, tuple):
            _untils(child, found)


Cover = tuple[frozenset, frozenset, frozenset]


def expand(obligations: frozenset) -> list[Cover]:
    """
    Split a set of obligations into covers

    Each cover is (literals now, obligations next, untils postponed now).
    Contradictory covers are dropped.
    """
    covers: set[Cover] = set()
    stack = [(tuple(obligations), frozenset(), frozenset(), frozenset())]
    while stack:
        todo, lits, nexts, pending = stack.pop()
        if not todo:
            covers.add((lits, nexts, pending))
            continue
        node, rest = todo[-1], todo[:-1]
        kind = node[0]
        if kind == "tt":
            stack.append((rest, lits, nexts, pending))
        elif kind == "ff":
            continue
        elif kind == "lit":
            if (node[1], not node[2]) in lits:
                continue
            stack.append((rest, lits | {(node[1], node[2])}, nexts, pending))
        elif kind == "and":
            stack.append((rest + (node[1], node[2]), lits, nexts, pending))
        elif kind == "or":
            stack.append((rest + (node[2],), lits, nexts, pending))
            stack.append((rest + (node[1],), lits, nexts, pending))
        elif kind == "X":
            stack.append((rest, lits, nexts | {node[1]}, pending))
        elif kind == "U":
            stack.append((rest + (node[1],), lits, nexts | {node}, pending | {node}))
            stack.append((rest + (node[2],), lits, nexts, pending))
        elif kind == "R":
            stack.append((rest + (node[2],), lits, nexts | {node}, pending))
            stack.append((rest + (node[1], node[2]), lits, nexts, pending))
        else:
            raise TypeError(f"Unknown normal form node {kind}")
    return sorted(covers, key=_cover_key)


def _cover_key(cover: Cover) -> tuple:
    lits, nexts, pending = cover
    return (sorted(lits), sorted(map(repr, nexts)), sorted(map(repr, pending)))


def _normalize(obligations: frozenset) -> frozenset:
    return obligations - {TT}


def ltl_to_gba(formula: Formula, max_states: int = DEFAULT_MAX_STATES) -> GeneralizedBuchiAutomaton:
    """
    Translate a core formula into a generalized Büchi automaton

    Args:
        formula: Core-form formula
        max_states: Resource cap on the number of tableau states

    Returns:
        GBA accepting exactly the words satisfying the formula; states are ints
        in breadth-first order with 0 initial
    """
    start_time = time.time()
    root = to_nnf(formula)
    found: dict[Nnf, None] = {}
    _untils(root, found)
    untils = sorted(found, key=repr)

    initial_key = (_normalize(frozenset((root,))), frozenset())
    ids: dict[tuple[frozenset, frozenset], int] = {initial_key: 0}
    keys = [initial_key]
    transitions: list[Transition] = []
    expansion_cache: dict[frozenset, list[Cover]] = {}

    frontier = 0
    while frontier < len(keys):
        obligations, _ = keys[frontier]
        source = frontier
        frontier += 1
        covers = expansion_cache.get(obligations)
        if covers is None:
            covers = expand(obligations)
            expansion_cache[obligations] = covers
        seen_edges: set[tuple[TransitionGuard, int]] = set()
        for lits, nexts, pending in covers:
            key = (_normalize(nexts), pending)
            target = ids.get(key)
            if target is None:
                if len(keys) >= max_states:
                    raise ResourceLimitError(
                        f"Translation of {formula} exceeds the cap of {max_states} states"
                    )
                target = len(keys)
                ids[key] = target
                keys.append(key)
            guard = TransitionGuard.of(
                (name for name, positive in lits if positive),
                (name for name, positive in lits if not positive),
            )
            if (guard, target) in seen_edges:
                continue
            seen_edges.add((guard, target))
            transitions.append(Transition(source, guard, target))

    states = tuple(range(len(keys)))
    if untils:
        acceptance = tuple(
            frozenset(idx for idx, (_, pending) in enumerate(keys) if until not in pending)
            for until in untils
        )
    else:
        # No eventualities: every run is accepting
        acceptance = (frozenset(states),)

    log.debug(
        f"Took {time.time() - start_time:.4f} seconds to translate {formula} "
        f"({len(states)} states, {len(acceptance)} acceptance sets)"
    )
    return GeneralizedBuchiAutomaton(states, 0, tuple(transitions), acceptance)


def degeneralize(gba: GeneralizedBuchiAutomaton) -> BuchiAutomaton:
    """
    Counter construction turning a GBA into a language-equivalent BA

    The counter moves from j to (j mod m) + 1 exactly when the source state
    belongs to the j-th acceptance set.
    """
    m = gba.acceptance_count
    states = tuple((q, j) for q in gba.states for j in range(1, m + 1))
    transitions = []
    for t in gba.transitions:
        for j in range(1, m + 1):
            advanced = (j % m) + 1 if t.source in gba.acceptance[j - 1] else j
            transitions.append(Transition((t.source, j), t.guard, (t.target, advanced)))
    accepting = frozenset((q, 1) for q in gba.acceptance[0])
    return BuchiAutomaton(states, (gba.initial, 1), tuple(transitions), accepting)


def uncovered_guards(
    guards: Sequence[TransitionGuard],
    assignment: Optional[dict[str, bool]] = None,
) -> list[TransitionGuard]:
    """
    Disjoint cubes covering exactly the letters no guard matches

    Shannon expansion on the literals of the first guard still undecided.
    """
    assignment = assignment or {}
    relevant = []
    for guard in guards:
        if any(assignment.get(name) is False for name in guard.positive):
            continue
        if any(assignment.get(name) is True for name in guard.negative):
            continue
        if all(name in assignment for name in guard.propositions):
            return []
        relevant.append(guard)
    if not relevant:
        return [TransitionGuard.of(
            (name for name, value in assignment.items() if value),
            (name for name, value in assignment.items() if not value),
        )]
    pivot = min(name for name in relevant[0].propositions if name not in assignment)
    return (
        uncovered_guards(relevant, {**assignment, pivot: True})
        + uncovered_guards(relevant, {**assignment, pivot: False})
    )


def _fresh_state(states: Sequence[Hashable]) -> Hashable:
    if states and all(isinstance(s, int) for s in states):
        return max(states) + 1
    candidate, suffix = "sink", 0
    known = set(states)
    while candidate in known:
        suffix += 1
        candidate = f"sink{suffix}"
    return candidate


def make_nonblocking(gba: GeneralizedBuchiAutomaton) -> GeneralizedBuchiAutomaton:
    """
    Complete an automaton so every state has a successor for every letter

    Missing letters are routed to a fresh non-accepting sink with a true self-loop.
    An automaton that is already non-blocking is returned unchanged.
    """
    sink = _fresh_state(gba.states)
    extra: list[Transition] = []
    for state in gba.states:
        for cube in uncovered_guards([t.guard for t in gba.successors[state]]):
            extra.append(Transition(state, cube, sink))
    if not extra:
        return gba
    log.debug(f"Added sink state {sink!r} with {len(extra)} completing transitions")
    return GeneralizedBuchiAutomaton(
        gba.states + (sink,),
        gba.initial,
        gba.transitions + tuple(extra) + (Transition(sink, TRUE_GUARD, sink),),
        gba.acceptance,
    )


def is_nonblocking(gba: GeneralizedBuchiAutomaton | BuchiAutomaton) -> bool:
    return all(not uncovered_guards([t.guard for t in gba.successors[q]]) for q in gba.states)


def translate(formula: Formula, max_states: int = DEFAULT_MAX_STATES) -> GeneralizedBuchiAutomaton:
    """Non-blocking GBA for a formula, as consumed by the weighted construction"""
    return make_nonblocking(ltl_to_gba(formula, max_states))


def accepts_lasso(
    automaton: GeneralizedBuchiAutomaton | BuchiAutomaton,
    prefix: Sequence[frozenset[str]],
    cycle: Sequence[frozenset[str]],
) -> bool:
    """
    Membership of the word prefix · cycle^ω in the automaton language

    Searches the finite graph of (word position, automaton state) pairs for a
    reachable strongly connected component that is a real cycle and meets every
    acceptance set.
    """
    if not cycle:
        raise EmptyCycleError("Lasso word needs a non-empty cycle")
    word = [frozenset(letter) for letter in list(prefix) + list(cycle)]
    loop_start = len(prefix)

    def next_position(pos: int) -> int:
        return pos + 1 if pos + 1 < len(word) else loop_start

    graph = nx.DiGraph()
    start = (0, automaton.initial)
    graph.add_node(start)
    stack = [start]
    while stack:
        pos, state = stack.pop()
        succ_pos = next_position(pos)
        for target in automaton.step(state, word[pos]):
            node = (succ_pos, target)
            if node not in graph:
                graph.add_node(node)
                stack.append(node)
            graph.add_edge((pos, state), node)

    for component in nx.strongly_connected_components(graph):
        if len(component) == 1:
            (node,) = component
            if not graph.has_edge(node, node):
                continue
        states = {state for _, state in component}
        if all(states & accepting for accepting in automaton.acceptance):
            return True
    return False
