"""
Automaton Model
Guards, generalized Büchi and Büchi automata over the alphabet 2^AP
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Optional

from .errors import ModelValidationError


State = Hashable


@dataclass(frozen=True)
class TransitionGuard:
    """
    Conjunction of literals over propositions

    A guard matches a label set when every positive literal is in it and no
    negative literal is. The empty guard matches everything.
    """
    positive: frozenset[str] = frozenset()
    negative: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.positive & self.negative:
            raise ModelValidationError(f"Contradictory guard on {sorted(self.positive & self.negative)}")

    @classmethod
    def of(cls, positive: Iterable[str] = (), negative: Iterable[str] = ()) -> "TransitionGuard":
        return cls(frozenset(positive), frozenset(negative))

    @property
    def propositions(self) -> frozenset[str]:
        return self.positive | self.negative

    def matches(self, label: frozenset[str] | set[str]) -> bool:
        return self.positive <= label and not (self.negative & label)

    def conjoin(self, other: "TransitionGuard") -> Optional["TransitionGuard"]:
        """Literal-set union, or None when the conjunction is contradictory"""
        positive = self.positive | other.positive
        negative = self.negative | other.negative
        if positive & negative:
            return None
        return TransitionGuard(positive, negative)

    def literals(self) -> list[str]:
        """Sorted literal list, negatives prefixed with '!'"""
        items = [(name, name) for name in self.positive]
        items += [(name, f"!{name}") for name in self.negative]
        return [text for _, text in sorted(items)]

    def __str__(self) -> str:
        return " & ".join(self.literals()) or "true"


TRUE_GUARD = TransitionGuard()


@dataclass(frozen=True)
class Transition:
    source: State
    guard: TransitionGuard
    target: State


@dataclass(frozen=True)
class _AutomatonBase:
    """Shared structure of the ω-automata; states are kept in first-reachability order"""
    states: tuple[State, ...]
    initial: State
    transitions: tuple[Transition, ...]

    def _validate_structure(self):
        known = set(self.states)
        if self.initial not in known:
            raise ModelValidationError(f"Initial state {self.initial!r} is not a state", str(self.initial))
        for t in self.transitions:
            if t.source not in known or t.target not in known:
                raise ModelValidationError(f"Transition {t.source!r} -> {t.target!r} leaves the state set")

    @cached_property
    def successors(self) -> dict[State, tuple[Transition, ...]]:
        """Outgoing transitions indexed by source state"""
        index: dict[State, list[Transition]] = {state: [] for state in self.states}
        for t in self.transitions:
            index[t.source].append(t)
        return {state: tuple(out) for state, out in index.items()}

    @cached_property
    def propositions(self) -> frozenset[str]:
        found: frozenset[str] = frozenset()
        for t in self.transitions:
            found |= t.guard.propositions
        return found

    @cached_property
    def state_index(self) -> dict[State, int]:
        return {state: idx for idx, state in enumerate(self.states)}

    def step(self, state: State, label: frozenset[str]) -> list[State]:
        """Targets reachable from state when reading label"""
        return [t.target for t in self.successors[state] if t.guard.matches(label)]


@dataclass(frozen=True)
class GeneralizedBuchiAutomaton(_AutomatonBase):
    """Büchi automaton whose acceptance is an ordered family of state sets"""
    acceptance: tuple[frozenset[State], ...] = field(default=())

    def __post_init__(self):
        self._validate_structure()
        if not self.acceptance:
            raise ModelValidationError("Acceptance family must be non-empty after normalization")
        known = set(self.states)
        for accepting in self.acceptance:
            if not accepting <= known:
                raise ModelValidationError("Acceptance set is not a subset of the states")

    @property
    def acceptance_count(self) -> int:
        return len(self.acceptance)


@dataclass(frozen=True)
class BuchiAutomaton(_AutomatonBase):
    """Büchi automaton with a single accepting set"""
    accepting: frozenset[State] = field(default=frozenset())

    def __post_init__(self):
        self._validate_structure()
        if not self.accepting <= set(self.states):
            raise ModelValidationError("Accepting set is not a subset of the states")

    @property
    def acceptance(self) -> tuple[frozenset[State], ...]:
        """Single-set family view, so GBA and BA share acceptance checks"""
        return (self.accepting,)
