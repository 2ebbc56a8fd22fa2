"""Shared fixtures: tiny hand-written systems and a seeded random instance factory"""

import pytest

from models import MissionSpec, TransitionSystem
from services import generate_random_instance, parse_formula


@pytest.fixture
def ping_pong() -> TransitionSystem:
    """s0 {p} <-> s1 {q}"""
    return TransitionSystem(
        states=("s0", "s1"),
        initial="s0",
        successors={"s0": ("s1",), "s1": ("s0",)},
        propositions=("p", "q"),
        labels={"s0": frozenset({"p"}), "s1": frozenset({"q"})},
    )


@pytest.fixture
def p_loop() -> TransitionSystem:
    """Single state labeled {p} with a self-loop"""
    return TransitionSystem(("s0",), "s0", {"s0": ("s0",)}, ("p",), {"s0": frozenset({"p"})})


@pytest.fixture
def branching() -> TransitionSystem:
    """
    s0 chooses between a p-loop (s1) and a q-loop (s2); s3 joins both loops

        s0 -> s1 <-> s3 <-> s2 <- s0
    """
    return TransitionSystem(
        states=("s0", "s1", "s2", "s3"),
        initial="s0",
        successors={"s0": ("s1", "s2"), "s1": ("s1", "s3"), "s2": ("s2", "s3"), "s3": ("s1", "s2")},
        propositions=("p", "q"),
        labels={"s1": frozenset({"p"}), "s2": frozenset({"q"})},
    )


@pytest.fixture
def spec_of():
    """Build a MissionSpec from (formula text, reward) pairs in priority order"""

    def build(*items: tuple[str, int]) -> MissionSpec:
        return MissionSpec.from_formulas((parse_formula(text), reward, text) for text, reward in items)

    return build


@pytest.fixture
def random_instance():
    """Seeded random (ts, spec) factory"""

    def build(seed: int, max_states: int = 6, num_props: int = 3, num_formulas: int = 3):
        return generate_random_instance(seed, max_states, num_props, num_formulas)

    return build
