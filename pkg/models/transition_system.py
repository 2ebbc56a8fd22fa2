"""
Transition System Model
Labeled, fully controllable transition system and the prioritized mission specification
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import ConfigurationError, ModelValidationError
from .formula import Formula


log = logging.getLogger("LTLMVP")

INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class TransitionSystem:
    """
    Finite labeled graph with an initial state

    Successor lists keep declaration order; the planner picks successors, so
    multiple successors mean choice, not probability.
    """
    states: tuple[str, ...]
    initial: str
    successors: dict[str, tuple[str, ...]]
    propositions: tuple[str, ...]
    labels: dict[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        known = set(self.states)
        if len(known) != len(self.states):
            duplicate = next(s for s in self.states if self.states.count(s) > 1)
            raise ModelValidationError(f"State {duplicate} declared twice", duplicate)
        if self.initial not in known:
            raise ModelValidationError(f"Initial state {self.initial} is not declared", self.initial)
        alphabet = set(self.propositions)
        for state, targets in self.successors.items():
            if state not in known:
                raise ModelValidationError(f"Transition from undeclared state {state}", state)
            for target in targets:
                if target not in known:
                    raise ModelValidationError(f"Transition {state} -> {target} targets an undeclared state", target)
        for state, label in self.labels.items():
            if state not in known:
                raise ModelValidationError(f"Label on undeclared state {state}", state)
            unknown = label - alphabet
            if unknown:
                raise ModelValidationError(
                    f"State {state} is labeled with undeclared propositions {sorted(unknown)}", state
                )
        for state in self.states:
            if not self.successors.get(state):
                raise ModelValidationError(f"State {state} has no outgoing transition (deadlock)", state)

    def label(self, state: str) -> frozenset[str]:
        return self.labels.get(state, frozenset())

    def post(self, state: str) -> tuple[str, ...]:
        return self.successors.get(state, ())

    def has_transition(self, source: str, target: str) -> bool:
        return target in self.successors.get(source, ())

    @cached_property
    def transition_count(self) -> int:
        return sum(len(targets) for targets in self.successors.values())


@dataclass(frozen=True)
class SpecEntry:
    """One prioritized formula; index is its position in the original file"""
    formula: Formula
    reward: int
    text: str
    index: int


@dataclass(frozen=True)
class MissionSpec:
    """Formulas with rewards, kept sorted by non-increasing reward"""
    entries: tuple[SpecEntry, ...] = ()

    @classmethod
    def from_formulas(cls, items: Iterable[tuple[Formula, int, str]]) -> "MissionSpec":
        """
        Build a spec from (formula, reward, source text) triples in priority order

        Args:
            items: Formulas in their original order

        Returns:
            MissionSpec reordered by non-increasing reward (stable)
        """
        entries = []
        for idx, (formula, reward, text) in enumerate(items):
            if reward < 0:
                raise ConfigurationError(f"Reward of formula {idx} must be non-negative, got {reward}")
            if reward > INT64_MAX:
                raise ConfigurationError(f"Reward of formula {idx} exceeds the 64-bit range")
            if reward == 0:
                log.warning(f"Formula {idx} ({text}) has reward 0 and does not influence the objective")
            entries.append(SpecEntry(formula, reward, text, idx))
        entries.sort(key=lambda e: (-e.reward, e.index))
        total = sum(e.reward for e in entries)
        if total > INT64_MAX:
            raise ConfigurationError("Total reward exceeds the 64-bit range")
        return cls(tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def formulas(self) -> list[Formula]:
        return [e.formula for e in self.entries]

    @property
    def rewards(self) -> list[int]:
        return [e.reward for e in self.entries]

    @property
    def total_reward(self) -> int:
        return sum(e.reward for e in self.entries)

    @cached_property
    def propositions(self) -> frozenset[str]:
        found: frozenset[str] = frozenset()
        for e in self.entries:
            found |= e.formula.atoms
        return found

    def original_order(self) -> list[SpecEntry]:
        return sorted(self.entries, key=lambda e: e.index)

    def lexicographic(self) -> "MissionSpec":
        """
        Replace rewards by 2^(n-i) following the original formula order,
        so any formula outweighs all lower-priority ones together
        """
        ordered = self.original_order()
        n = len(ordered)
        if n and 2**n - 1 > INT64_MAX:
            raise ConfigurationError(f"Lexicographic rewards for {n} formulas overflow the 64-bit range")
        return MissionSpec.from_formulas(
            (e.formula, 2 ** (n - 1 - pos), e.text) for pos, e in enumerate(ordered)
        )

    def scaled(self, factor: int) -> "MissionSpec":
        return MissionSpec.from_formulas((e.formula, e.reward * factor, e.text) for e in self.original_order())

    def with_formula(self, formula: Formula, reward: int, text: Optional[str] = None) -> "MissionSpec":
        items = [(e.formula, e.reward, e.text) for e in self.original_order()]
        items.append((formula, reward, text or str(formula)))
        return MissionSpec.from_formulas(items)

    def check_alphabet(self, ts: TransitionSystem):
        """Every formula proposition must be declared by the model"""
        undeclared = self.propositions - set(ts.propositions)
        if undeclared:
            raise ModelValidationError(f"Formulas use undeclared propositions {sorted(undeclared)}")
