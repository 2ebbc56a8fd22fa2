"""
Planner - weighted nested depth-first search for maximal-reward lassos

The outer search walks the product in postorder. Every accepting state it finishes
becomes the root of an inner longest-cycle search, which propagates maximal simple
distances component by component (the component order is topological) and then
closes the best fragment back to the root through the accepting hub component.
"""

import heapq
import logging
import time
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Callable, Optional

import networkx as nx

from models.automaton import GeneralizedBuchiAutomaton
from models.errors import EmptyProductError, LTLMVPError, RewardMismatchError
from models.plan_model import Lasso, LassoPlan
from models.settings import PlannerSettings
from models.transition_system import MissionSpec, TransitionSystem
from models.weighted_model import ComponentTag, WeightedBuchiAutomaton, WeightedProductAutomaton
from services.scoring import trace_reward
from services.translator import translate
from services.weighted_builder import build_product, build_weighted_ba, cycle_fragments


log = logging.getLogger("LTLMVP")


@dataclass
class SearchTable:
    """
    Scratch annotations owned by one planning run

    `visited_inner[p]` maps a hub strongly connected component to the best distance
    p was fully expanded with from a root inside that component. A later root of the
    same component skips p unless it reaches p with a strictly larger distance.
    """
    reuse_inner_visits: bool = True
    hub_scc: dict[int, int] = field(default_factory=dict)
    visited_inner: dict[int, dict[int, int]] = field(default_factory=dict)
    expansions: int = 0
    pruned: int = 0

    @classmethod
    def for_product(cls, product: WeightedProductAutomaton, reuse_inner_visits: bool = True) -> "SearchTable":
        hub_scc = {}
        components = sorted(nx.strongly_connected_components(product.hub_graph), key=min)
        for idx, component in enumerate(components):
            for p in component:
                hub_scc[p] = idx
        return cls(reuse_inner_visits, hub_scc)

    def dominated(self, state: int, root: int, dist: int) -> bool:
        if not self.reuse_inner_visits:
            return False
        seen = self.visited_inner.get(state)
        return seen is not None and seen.get(self.hub_scc[root], -1) >= dist

    def mark_expanded(self, state: int, root: int, dist: int):
        seen = self.visited_inner.setdefault(state, {})
        scc = self.hub_scc[root]
        if dist > seen.get(scc, -1):
            seen[scc] = dist


@dataclass
class CycleSearch:
    """Annotations of one longest-cycle search from an accepting root"""
    product: WeightedProductAutomaton
    root: int
    table: SearchTable
    dist: dict[int, int] = field(default_factory=dict)
    pred: dict[int, Optional[int]] = field(default_factory=dict)
    # Hub states reached by leaving the root's fragment: state -> (dist, predecessor)
    search_from: dict[int, tuple[int, int]] = field(default_factory=dict)
    queues: dict[ComponentTag, list[tuple[int, int]]] = field(default_factory=lambda: defaultdict(list))
    expanded: set[int] = field(default_factory=set)

    def expand(self, state: int):
        """Relax every successor of a state with its current distance"""
        base = self.dist[state]
        self.table.expansions += 1
        for target, weight in self.product.successors[state]:
            candidate = base + weight
            tag = self.product.tags[target]
            if tag.is_hub:
                best = self.search_from.get(target)
                if best is None or candidate > best[0]:
                    self.search_from[target] = (candidate, state)
            elif candidate > self.dist.get(target, -1):
                self.dist[target] = candidate
                self.pred[target] = state
                heapq.heappush(self.queues[tag], (-candidate, target))

    def stem(self, last: int) -> list[int]:
        """Predecessor chain root ... last"""
        chain = [last]
        while chain[-1] != self.root:
            chain.append(self.pred[chain[-1]])
        chain.reverse()
        return chain


def propagate(search: CycleSearch, component: ComponentTag):
    """
    Settle the maximal simple distance of every state of one component

    States pop in decreasing distance; edges inside a component weigh 0, so the
    first pop of a state is final. Hub successors are collected in search_from.
    """
    queue = search.queues.get(component)
    while queue:
        negative, state = heapq.heappop(queue)
        if -negative < search.dist[state] or state in search.expanded:
            continue
        search.expanded.add(state)
        if search.table.dominated(state, search.root, search.dist[state]):
            search.table.pruned += 1
            continue
        search.expand(state)
        search.table.mark_expanded(state, search.root, search.dist[state])


def find_path(
    product: WeightedProductAutomaton,
    source: int,
    target: int,
    restrict: Optional[Callable[[int], bool]] = None,
) -> list[int]:
    """
    Breadth-first shortest path with at least one edge

    Args:
        product: Product automaton
        source: Start state
        target: End state; equal to source asks for a closing cycle
        restrict: Predicate every visited state must satisfy

    Returns:
        [source, ..., target], or [] when no such path exists
    """
    parents: dict[int, int] = {}
    queue = deque([source])
    while queue:
        state = queue.popleft()
        for succ, _ in product.successors[state]:
            if restrict is not None and not restrict(succ):
                continue
            if succ == target:
                path = [target, state]
                while path[-1] != source:
                    path.append(parents[path[-1]])
                path.reverse()
                return path
            if succ not in parents and succ != source:
                parents[succ] = state
                queue.append(succ)
    return []


def longest_cycle_search(
    product: WeightedProductAutomaton,
    root: int,
    table: Optional[SearchTable] = None,
) -> tuple[tuple[int, ...], int]:
    """
    Cycle through an accepting root maximizing its first fragment weight

    Args:
        product: Product automaton
        root: Accepting state the cycle starts and ends at
        table: Run-wide scratch table, a fresh one when omitted

    Returns:
        (cycle, weight) with the root first and not repeated, or ((), -1) when
        no cycle passes through the root
    """
    table = table if table is not None else SearchTable.for_product(product)
    search = CycleSearch(product, root, table)
    search.dist[root] = 0
    search.pred[root] = None
    search.expand(root)

    for component in product.component_order:
        if not component.is_hub:
            propagate(search, component)

    def in_hub(state: int) -> bool:
        return product.tags[state].is_hub

    ranked = sorted(search.search_from.items(), key=lambda item: (-item[1][0], item[0]))
    for endpoint, (weight, last) in ranked:
        if endpoint == root:
            closing: list[int] = [root]
        else:
            closing = find_path(product, endpoint, root, in_hub)
            if not closing:
                continue
        cycle = search.stem(last) + closing[:-1]
        return tuple(cycle), weight
    return (), -1


def find_arbitrary_trace(product: WeightedProductAutomaton) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Follow the smallest successor from the initial state until a state repeats"""
    order: dict[int, int] = {}
    state = product.initial
    while state not in order:
        order[state] = len(order)
        if not product.successors[state]:
            raise EmptyProductError(f"Product state {state} has no successor")
        state = product.successors[state][0][0]
    walk = list(order)
    start = order[state]
    return tuple(walk[:start]), tuple(walk[start:])


def plan(
    product: WeightedProductAutomaton,
    total_reward: Optional[int] = None,
    reuse_inner_visits: bool = True,
) -> LassoPlan:
    """
    Maximal-reward lasso of the product

    Args:
        product: Weighted product automaton
        total_reward: Sum of all rewards; the search stops once it is reached
        reuse_inner_visits: Skip states already expanded from an equivalent root

    Returns:
        LassoPlan over product ids with its transition-system projection

    Raises:
        EmptyProductError: When the product has no initial state
        LTLMVPError: When the best cycle does not split into one weighted fragment
    """
    if len(product) == 0:
        raise EmptyProductError("Product automaton has no initial state")
    total_reward = product.total_reward if total_reward is None else total_reward

    start_time = time.time()
    table = SearchTable.for_product(product, reuse_inner_visits)
    best: Optional[tuple[tuple[int, ...], tuple[int, ...], int]] = None
    weight_max = -1
    roots = 0

    visited_outer = {product.initial}
    stack = [product.initial]
    pending = [iter(product.successors[product.initial])]
    while stack:
        advanced = False
        for succ, _ in pending[-1]:
            if succ not in visited_outer:
                visited_outer.add(succ)
                stack.append(succ)
                pending.append(iter(product.successors[succ]))
                advanced = True
                break
        if advanced:
            continue
        state = stack.pop()
        pending.pop()
        if not product.is_accepting(state):
            continue
        roots += 1
        cycle, weight = longest_cycle_search(product, state, table)
        if cycle and weight > weight_max:
            weight_max = weight
            best = (tuple(stack), cycle, weight)
            log.debug(f"New best reward {weight} from root {state}")
            if weight_max >= total_reward:
                break

    log.info(
        f"Took {time.time() - start_time:.4f} seconds to search {len(visited_outer)} states "
        f"({roots} roots, {table.expansions} expansions, {table.pruned} pruned)"
    )

    if best is None:
        log.warning("Product has no accepting lasso; returning an arbitrary trace with reward 0")
        prefix, cycle = find_arbitrary_trace(product)
        return LassoPlan(0, _project(product, prefix, cycle), prefix, cycle, fallback=True)

    prefix, cycle, weight = best
    pieces = tuple(cycle_fragments(cycle, product.is_accepting, product.weight))
    if pieces and (pieces[0].weight != weight or any(f.weight for f in pieces[1:])):
        raise LTLMVPError(f"Plan fragments {[f.weight for f in pieces]} do not match reward {weight}")
    return LassoPlan(weight, _project(product, prefix, cycle), prefix, cycle, fragments=pieces)


def _project(product: WeightedProductAutomaton, prefix: tuple[int, ...], cycle: tuple[int, ...]) -> Lasso:
    return Lasso(tuple(product.project(p) for p in prefix), tuple(product.project(p) for p in cycle))


@dataclass(frozen=True)
class PlanningArtifacts:
    """Intermediate automata of one planning pipeline run"""
    spec: MissionSpec
    gbas: tuple[GeneralizedBuchiAutomaton, ...]
    wba: WeightedBuchiAutomaton
    product: WeightedProductAutomaton


def prepare_product(
    ts: TransitionSystem,
    spec: MissionSpec,
    settings: Optional[PlannerSettings] = None,
) -> PlanningArtifacts:
    """Translate every formula, build the weighted automaton and its product with the system"""
    settings = settings or PlannerSettings()
    if settings.lexicographic:
        spec = spec.lexicographic()
    spec.check_alphabet(ts)

    start_time = time.time()
    gbas = tuple(translate(formula, settings.max_states) for formula in spec.formulas)
    log.info(
        f"Took {time.time() - start_time:.4f} seconds to translate {len(gbas)} formulas "
        f"({[len(g.states) for g in gbas]} states)"
    )
    wba = build_weighted_ba(gbas, spec.rewards, settings.max_states)
    product = build_product(ts, wba, spec.total_reward, settings.max_states)
    return PlanningArtifacts(spec, gbas, wba, product)


def plan_instance(
    ts: TransitionSystem,
    spec: MissionSpec,
    settings: Optional[PlannerSettings] = None,
    artifacts: Optional[PlanningArtifacts] = None,
) -> LassoPlan:
    """
    Full pipeline: build the product, search it, then re-score the projected
    trace formula by formula

    Args:
        ts: Transition system
        spec: Prioritized formulas
        settings: Planner configuration
        artifacts: Product prepared earlier for the same inputs

    Raises:
        RewardMismatchError: When re-scoring disagrees with the search result
    """
    settings = settings or PlannerSettings()
    artifacts = artifacts or prepare_product(ts, spec, settings)
    result = plan(artifacts.product, artifacts.spec.total_reward, settings.reuse_inner_visits)

    score = trace_reward(ts, artifacts.spec, result.trace)
    if not result.is_fallback and score.reward != result.reward:
        raise RewardMismatchError(
            f"Searched reward {result.reward} but the trace satisfies formulas worth {score.reward}"
        )
    return LassoPlan(
        reward=result.reward,
        trace=result.trace,
        prefix=result.prefix,
        cycle=result.cycle,
        verdicts=score.verdicts,
        fragments=result.fragments,
        fallback=result.fallback,
    )
