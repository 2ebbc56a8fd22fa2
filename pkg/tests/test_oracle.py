import random

import networkx as nx
import pytest

from models import (
    EmptyIntersectionError, Lasso, OracleCapExceededError, PlannerSettings, TransitionSystem,
)
from services import (
    accepts_lasso, brute_force_plan, degeneralize, enumerate_lassos, enumerate_words,
    find_accepting_lasso, intersect, ltl_eval_lasso, ltl_to_gba, optimal_subsets, parse_formula,
)
from services.oracle import automaton_lasso, system_lasso, universal_automaton


def ba_for(text):
    return degeneralize(ltl_to_gba(parse_formula(text)))


class TestBruteForcePlan:
    def test_conflicting_invariants(self, p_loop, spec_of):
        result = brute_force_plan(p_loop, spec_of(("G p", 3), ("G !p", 2)))
        assert result.reward == 3
        assert result.targeted == (0,)
        assert result.incidental == ()
        assert result.subsets_checked == 2

    def test_unsatisfiable_formula_is_never_targeted(self, p_loop, spec_of):
        result = brute_force_plan(p_loop, spec_of(("p & !p", 5), ("G p", 1)))
        assert result.reward == 1
        assert 0 not in result.targeted

    def test_incidental_formulas_reported(self, ping_pong, spec_of):
        result = brute_force_plan(ping_pong, spec_of(("G F p", 3), ("G p", 2), ("F q", 1)))
        assert result.reward == 4
        assert result.targeted == (0, 2)
        assert [v.satisfied for v in result.verdicts] == [True, False, True]

    def test_witness_trace_is_scored(self, branching, spec_of):
        spec = spec_of(("G F p", 4), ("G F q", 3), ("F G p", 2))
        result = brute_force_plan(branching, spec)
        assert result.reward == 7
        assert sum(v.reward for v in result.verdicts if v.satisfied) == 7

    def test_ties_prefer_higher_priority(self, branching, spec_of):
        result = brute_force_plan(branching, spec_of(("F G p", 2), ("F G q", 2)))
        assert result.targeted == (0,)

    def test_state_cap(self, spec_of):
        states = tuple(f"s{i}" for i in range(13))
        ts = TransitionSystem(states, "s0", {s: (s,) for s in states}, ("p",))
        with pytest.raises(OracleCapExceededError):
            brute_force_plan(ts, spec_of(("F p", 1)))

    def test_formula_cap(self, p_loop, spec_of):
        spec = spec_of(*[("F p", 1)] * 5)
        with pytest.raises(OracleCapExceededError):
            brute_force_plan(p_loop, spec)
        assert brute_force_plan(p_loop, spec, PlannerSettings(oracle_max_formulas=5)).reward == 5

    @pytest.mark.parametrize("seed", range(20))
    def test_permuting_equal_rewards(self, random_instance, spec_of, seed):
        ts, spec = random_instance(seed)
        entries = spec.original_order()
        texts = [(e.text, 5) for e in entries]
        assert brute_force_plan(ts, spec_of(*texts)).reward == brute_force_plan(ts, spec_of(*texts[::-1])).reward


class TestOptimalSubsets:
    @pytest.mark.parametrize("seed", range(20))
    def test_scaling_keeps_optimal_sets(self, random_instance, seed):
        ts, spec = random_instance(seed, max_states=4)
        best, winners = optimal_subsets(ts, spec, 4)
        scaled_best, scaled_winners = optimal_subsets(ts, spec.scaled(3), 4)
        assert scaled_best == 3 * best
        assert scaled_winners == winners

    def test_branching(self, branching, spec_of):
        best, winners = optimal_subsets(branching, spec_of(("F G p", 2), ("F G q", 2)), 4)
        assert best == 2
        assert winners == {frozenset({0}), frozenset({1})}


class TestIntersect:
    def test_requires_input(self):
        with pytest.raises(EmptyIntersectionError):
            intersect([])

    @pytest.mark.parametrize("prefix, cycle", [
        ([], [{"p"}, {"q"}]),
        ([], [{"p"}]),
        ([{"q"}], [{"p", "q"}]),
        ([{"p"}], [set()]),
    ])
    def test_language_is_the_conjunction(self, prefix, cycle):
        left, right = ba_for("G F p"), ba_for("G F q")
        prefix = [frozenset(x) for x in prefix]
        cycle = [frozenset(x) for x in cycle]
        expected = accepts_lasso(left, prefix, cycle) and accepts_lasso(right, prefix, cycle)
        assert accepts_lasso(intersect([left, right]), prefix, cycle) == expected

    def test_conflict_is_empty(self):
        assert automaton_lasso(intersect([ba_for("G p"), ba_for("F !p")])) is None
        assert system_lasso(
            TransitionSystem(("s0",), "s0", {"s0": ("s0",)}, ("p",), {"s0": frozenset({"p"})}),
            intersect([ba_for("G p"), ba_for("F !p")]),
        ) is None

    def test_universal_automaton(self):
        assert accepts_lasso(universal_automaton(), [], [frozenset()])


class TestFindAcceptingLasso:
    def test_acyclic_graph(self):
        graph = {0: [1, 2], 1: [2], 2: []}
        assert find_accepting_lasso(0, graph.__getitem__, lambda n: True) is None

    def test_self_loop(self):
        graph = {0: [1], 1: [1]}
        assert find_accepting_lasso(0, graph.__getitem__, lambda n: n == 1) == Lasso((0,), (1,))

    @pytest.mark.parametrize("seed", range(60))
    def test_matches_cycle_enumeration(self, seed):
        rng = random.Random(seed)
        size = rng.randint(1, 10)
        graph = nx.gnp_random_graph(size, rng.uniform(0.05, 0.4), seed=seed, directed=True)
        accepting = {n for n in graph if rng.random() < 0.3}
        reachable = nx.descendants(graph, 0) | {0}
        on_cycle = {n for cycle in nx.simple_cycles(graph) for n in cycle}
        expected = bool(reachable & accepting & on_cycle)

        lasso = find_accepting_lasso(0, lambda n: sorted(graph.successors(n)), accepting.__contains__)
        assert (lasso is not None) == expected
        if lasso is not None:
            path = lasso.positions()
            assert path[0] == 0
            assert lasso.cycle[0] in accepting
            assert all(graph.has_edge(a, b) for a, b in zip(path, path[1:]))
            assert graph.has_edge(lasso.cycle[-1], lasso.cycle[0])


class TestEnumeration:
    def test_lassos_of_a_self_loop(self, p_loop):
        lassos = list(enumerate_lassos(p_loop, 3))
        assert lassos[0] == Lasso((), ("s0",))
        assert len(lassos) == 1 + 2 + 3
        assert all(len(lasso) <= 3 for lasso in lassos)

    def test_lassos_are_traces(self, branching):
        lassos = list(enumerate_lassos(branching, 4))
        assert Lasso(("s0",), ("s1",)) in lassos
        assert Lasso(("s0",), ("s1", "s2")) not in lassos
        assert Lasso(("s0",), ("s2", "s3")) in lassos

    def test_words(self):
        words = list(enumerate_words(["p"], 2))
        assert ((), (frozenset(),)) in words
        assert ((frozenset({"p"}),), (frozenset(),)) in words
        assert len(words) == 2 + 4 * 2

    def test_satisfiable_formulas_have_accepting_lassos(self):
        for text in ("G F p", "F G !p", "G (p -> X !p)", "p U (q & !p)", "G p & F !p"):
            formula = parse_formula(text)
            ba = ba_for(text)
            satisfiable = any(
                ltl_eval_lasso(formula, prefix, cycle) for prefix, cycle in enumerate_words(["p", "q"], 3)
            )
            assert (automaton_lasso(ba) is not None) == satisfiable
