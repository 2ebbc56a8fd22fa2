import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from models import (
    TRUE, TRUE_GUARD, And, Atom, BuchiAutomaton, GeneralizedBuchiAutomaton, Next, Not, ResourceLimitError,
    Transition, TransitionGuard, Until,
)
from services import (
    accepts_lasso, degeneralize, is_nonblocking, ltl_eval_lasso, ltl_to_gba, make_nonblocking,
    parse_formula, translate,
)
from services.oracle import automaton_lasso
from services.translator import uncovered_guards


PROPS = ("p", "q")

formulas = st.recursive(
    st.sampled_from([TRUE, Atom("p"), Atom("q")]),
    lambda children: st.one_of(
        children.map(Not),
        children.map(Next),
        st.tuples(children, children).map(lambda pair: And(*pair)),
        st.tuples(children, children).map(lambda pair: Until(*pair)),
    ),
    max_leaves=6,
)
letters = st.frozensets(st.sampled_from(PROPS))
prefixes = st.lists(letters, max_size=3)
cycles = st.lists(letters, min_size=1, max_size=3)


class TestLanguageAgreement:
    @settings(max_examples=500, deadline=None)
    @given(formulas, prefixes, cycles)
    def test_gba_matches_direct_evaluation(self, formula, prefix, cycle):
        gba = ltl_to_gba(formula)
        assert accepts_lasso(gba, prefix, cycle) == ltl_eval_lasso(formula, prefix, cycle)

    @settings(max_examples=200, deadline=None)
    @given(formulas, prefixes, cycles)
    def test_completion_and_degeneralization_preserve_language(self, formula, prefix, cycle):
        gba = ltl_to_gba(formula)
        expected = accepts_lasso(gba, prefix, cycle)
        assert accepts_lasso(make_nonblocking(gba), prefix, cycle) == expected
        assert accepts_lasso(degeneralize(gba), prefix, cycle) == expected

    @pytest.mark.parametrize("text", [
        "F (p & F q)",
        "G (p -> F q)",
        "G F p -> G F q",
        "G p & F !q",
        "p U (q U !p)",
        "G !p & F p",
    ])
    def test_mission_templates_on_all_short_words(self, text):
        formula = parse_formula(text)
        gba = ltl_to_gba(formula)
        rng = random.Random(text)
        alphabet = [frozenset(), frozenset({"p"}), frozenset({"q"}), frozenset({"p", "q"})]
        for _ in range(100):
            prefix = [rng.choice(alphabet) for _ in range(rng.randint(0, 3))]
            cycle = [rng.choice(alphabet) for _ in range(rng.randint(1, 3))]
            assert accepts_lasso(gba, prefix, cycle) == ltl_eval_lasso(formula, prefix, cycle)


class TestLtlToGba:
    def test_true_is_universal(self):
        gba = ltl_to_gba(TRUE)
        assert gba.states == (0,)
        assert len(gba.transitions) == 1
        assert gba.transitions[0].guard == TransitionGuard()
        assert gba.acceptance == (frozenset({0}),)

    def test_one_acceptance_set_per_until(self):
        assert ltl_to_gba(parse_formula("G F p & G F q")).acceptance_count == 2
        assert ltl_to_gba(parse_formula("G p")).acceptance_count == 1

    def test_false_has_no_transitions(self):
        gba = ltl_to_gba(parse_formula("p & !p"))
        assert not gba.successors[gba.initial]

    def test_deterministic_output(self):
        formula = parse_formula("G (p -> F q) & F (q & X p)")
        assert ltl_to_gba(formula) == ltl_to_gba(formula)

    def test_state_cap(self):
        with pytest.raises(ResourceLimitError):
            ltl_to_gba(parse_formula("G F p & G F q & F (p & X q)"), max_states=2)


class TestNonblocking:
    def test_atom_automaton_is_blocking(self):
        gba = ltl_to_gba(Atom("p"))
        assert not is_nonblocking(gba)
        completed = make_nonblocking(gba)
        assert is_nonblocking(completed)
        assert len(completed.states) == len(gba.states) + 1

    def test_sink_is_not_accepting(self):
        completed = make_nonblocking(ltl_to_gba(Atom("p")))
        sink = completed.states[-1]
        assert all(sink not in accepting for accepting in completed.acceptance)
        assert completed.step(sink, frozenset()) == [sink]

    def test_complete_automaton_is_returned_unchanged(self):
        gba = ltl_to_gba(TRUE)
        assert make_nonblocking(gba) is gba

    def test_translate_completes(self):
        assert is_nonblocking(translate(parse_formula("G p")))

    def test_uncovered_guards_partition_missing_letters(self):
        guards = [TransitionGuard.of(["p"]), TransitionGuard.of(["q"], ["p"])]
        missing = uncovered_guards(guards)
        for letter in (frozenset(), frozenset({"q"}), frozenset({"p"}), frozenset({"p", "q"})):
            covered = any(g.matches(letter) for g in guards)
            hits = sum(g.matches(letter) for g in missing)
            assert hits == (0 if covered else 1)


class TestDegeneralize:
    def test_single_accepting_set(self):
        ba = degeneralize(ltl_to_gba(parse_formula("G F p & G F q")))
        assert isinstance(ba, BuchiAutomaton)
        assert len(ba.acceptance) == 1
        assert ba.initial == (0, 1)

    def test_counter_copies(self):
        gba = ltl_to_gba(parse_formula("G F p & G F q"))
        ba = degeneralize(gba)
        assert len(ba.states) == len(gba.states) * 2


def random_gba(seed: int) -> GeneralizedBuchiAutomaton:
    rng = random.Random(seed)
    states = tuple(range(rng.randint(1, 6)))
    edges = sorted({(s, t) for s in states for t in rng.sample(states, rng.randint(1, min(3, len(states))))})
    acceptance = tuple(
        frozenset(s for s in states if rng.random() < 0.4) for _ in range(rng.randint(1, 3))
    )
    transitions = tuple(Transition(s, TRUE_GUARD, t) for s, t in edges)
    return GeneralizedBuchiAutomaton(states, 0, transitions, acceptance)


def gba_nonempty(gba: GeneralizedBuchiAutomaton) -> bool:
    """A reachable cyclic component meets every acceptance set"""
    graph = nx.DiGraph((t.source, t.target) for t in gba.transitions)
    graph.add_nodes_from(gba.states)
    reachable = graph.subgraph(nx.descendants(graph, gba.initial) | {gba.initial})
    for component in nx.strongly_connected_components(reachable):
        cyclic = len(component) > 1 or any(graph.has_edge(s, s) for s in component)
        if cyclic and all(component & accepting for accepting in gba.acceptance):
            return True
    return False


class TestDegeneralizedEmptiness:
    @pytest.mark.parametrize("seed", range(120))
    def test_emptiness_is_preserved(self, seed):
        gba = random_gba(seed)
        lasso = automaton_lasso(degeneralize(gba))
        assert (lasso is not None) == gba_nonempty(gba)
        if lasso is not None:
            visited = {q for q, _ in lasso.cycle}
            assert all(visited & accepting for accepting in gba.acceptance)
