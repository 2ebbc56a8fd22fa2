"""
Weighted Automata Model
Layered weighted Büchi automaton and its product with a transition system.
Both are immutable once built; search annotations live in planner-owned scratch tables.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import networkx as nx

from .automaton import State, TransitionGuard


@dataclass(frozen=True, order=True)
class ComponentTag:
    """
    Layer/component pair (j, l); (0, 0) is the accepting hub component

    Ordering is the flattened topological order (0,0) < (1,1) < ... < (1,m_1) < (2,1) < ...
    """
    layer: int = 0
    component: int = 0

    @property
    def is_hub(self) -> bool:
        return self.layer == 0

    def __str__(self) -> str:
        return f"{self.layer}.{self.component}"


HUB = ComponentTag(0, 0)


@dataclass(frozen=True)
class WeightedTransition:
    source: int
    guard: TransitionGuard
    target: int
    weight: int


@dataclass(frozen=True)
class WeightedBuchiAutomaton:
    """
    Layered automaton over the formula GBAs

    State ids are indices into `states`, assigned in breadth-first discovery order;
    each state is the tuple of component-automaton states plus its component tag.
    """
    states: tuple[tuple[tuple[State, ...], ComponentTag], ...]
    transitions: tuple[WeightedTransition, ...]
    rewards: tuple[int, ...]
    acceptance_counts: tuple[int, ...]
    initial: int = 0

    @cached_property
    def successors(self) -> tuple[tuple[WeightedTransition, ...], ...]:
        index: list[list[WeightedTransition]] = [[] for _ in self.states]
        for t in self.transitions:
            index[t.source].append(t)
        return tuple(tuple(out) for out in index)

    @cached_property
    def accepting(self) -> frozenset[int]:
        return frozenset(idx for idx, (_, tag) in enumerate(self.states) if tag.is_hub)

    @cached_property
    def propositions(self) -> frozenset[str]:
        found: frozenset[str] = frozenset()
        for t in self.transitions:
            found |= t.guard.propositions
        return found

    def tag(self, state: int) -> ComponentTag:
        return self.states[state][1]

    def components(self) -> list[ComponentTag]:
        """All component tags of the layered state space in topological order"""
        tags = [HUB]
        for layer, count in enumerate(self.acceptance_counts, start=1):
            tags.extend(ComponentTag(layer, l) for l in range(1, count + 1))
        return tags


@dataclass(frozen=True)
class WeightedProductAutomaton:
    """
    Reachable part of the product of a transition system with a weighted Büchi automaton

    State ids are indices into `states` = (ts state, weighted-BA state id), numbered in
    first-reachability order. `successors[p]` lists (target id, weight) by ascending target id.
    """
    states: tuple[tuple[str, int], ...]
    successors: tuple[tuple[tuple[int, int], ...], ...]
    tags: tuple[ComponentTag, ...]
    total_reward: int
    initial: int = 0

    def __len__(self) -> int:
        return len(self.states)

    def is_accepting(self, state: int) -> bool:
        return self.tags[state].is_hub

    def project(self, state: int) -> str:
        """α: product state to transition-system state"""
        return self.states[state][0]

    def weight(self, source: int, target: int) -> Optional[int]:
        for succ, weight in self.successors[source]:
            if succ == target:
                return weight
        return None

    @cached_property
    def accepting(self) -> frozenset[int]:
        return frozenset(p for p in range(len(self.states)) if self.tags[p].is_hub)

    @cached_property
    def transition_count(self) -> int:
        return sum(len(out) for out in self.successors)

    @cached_property
    def component_order(self) -> tuple[ComponentTag, ...]:
        return tuple(sorted(set(self.tags)))

    def to_networkx(self) -> nx.DiGraph:
        """Directed graph view with `weight` edge attributes and `tag` node attributes"""
        graph = nx.DiGraph()
        for p, tag in enumerate(self.tags):
            graph.add_node(p, tag=tag, ts_state=self.states[p][0])
        for p, out in enumerate(self.successors):
            for q, weight in out:
                graph.add_edge(p, q, weight=weight)
        return graph

    @cached_property
    def hub_graph(self) -> nx.DiGraph:
        """Subgraph induced by the accepting (0,0) component"""
        graph = nx.DiGraph()
        for p in sorted(self.accepting):
            graph.add_node(p)
            for q, _ in self.successors[p]:
                if self.tags[q].is_hub:
                    graph.add_edge(p, q)
        return graph
