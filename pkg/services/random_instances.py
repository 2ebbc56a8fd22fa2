"""
Random Instances - seeded planning problems for oracle comparison and scaling checks
"""

import logging
import random
from typing import Optional

from models.errors import ConfigurationError
from models.transition_system import MissionSpec, TransitionSystem
from services.ltl_parser import parse_formula


log = logging.getLogger("LTLMVP")

# Common mission patterns over literals {a} and {b}
FORMULA_TEMPLATES: dict[str, str] = {
    "reachability": "F {a}",
    "surveillance": "G F {a}",
    "safety": "G {a}",
    "reactivity": "G F {a} -> G F {b}",
    "response": "G ({a} -> F {b})",
    "sequencing": "F ({a} & F {b})",
}

PROPOSITION_NAMES = ("p", "q", "r", "s", "t", "u")


def _literal(rng: random.Random, props: list[str]) -> str:
    name = rng.choice(props)
    return f"!{name}" if rng.random() < 0.3 else name


def random_formula_text(rng: random.Random, props: list[str], template: Optional[str] = None) -> str:
    """Instantiate a template (random when not given) with random literals"""
    template = template or rng.choice(sorted(FORMULA_TEMPLATES))
    return FORMULA_TEMPLATES[template].format(a=_literal(rng, props), b=_literal(rng, props))


def generate_random_instance(
    seed: int,
    max_states: int = 6,
    num_props: int = 3,
    num_formulas: int = 3,
) -> tuple[TransitionSystem, MissionSpec]:
    """
    Seeded random planning instance

    Args:
        seed: Random seed; equal seeds give equal instances
        max_states: Upper bound on the number of states (drawn from 1..max_states)
        num_props: Number of propositions
        num_formulas: Number of template formulas, rewards drawn from 1..10

    Returns:
        (TransitionSystem, MissionSpec)

    Raises:
        ConfigurationError: On a non-positive state bound, a proposition count outside
            1..len(PROPOSITION_NAMES) or a negative formula count
    """
    if max_states < 1:
        raise ConfigurationError(f"Need at least one state, got max_states={max_states}")
    if not 1 <= num_props <= len(PROPOSITION_NAMES):
        raise ConfigurationError(
            f"Number of propositions must be within 1..{len(PROPOSITION_NAMES)}, got {num_props}"
        )
    if num_formulas < 0:
        raise ConfigurationError(f"Number of formulas must be non-negative, got {num_formulas}")
    rng = random.Random(seed)
    props = list(PROPOSITION_NAMES[:num_props])
    count = rng.randint(1, max_states)
    states = [f"s{i}" for i in range(count)]
    successors = {}
    for state in states:
        fanout = rng.randint(1, min(3, count))
        successors[state] = tuple(sorted(rng.sample(states, fanout), key=states.index))
    labels = {}
    for state in states:
        label = frozenset(p for p in props if rng.random() < 0.5)
        if label:
            labels[state] = label
    ts = TransitionSystem(tuple(states), states[0], successors, tuple(props), labels)

    items = []
    for _ in range(num_formulas):
        text = random_formula_text(rng, props)
        items.append((parse_formula(text), rng.randint(1, 10), text))
    spec = MissionSpec.from_formulas(items)
    log.debug(f"Random instance {seed}: {count} states, formulas {[e.text for e in spec.original_order()]}")
    return ts, spec


CHAIN_SPEC = (
    ("G F home & G F goal", 5),
    ("G !hazard", 3),
    ("F goal", 2),
    ("G F hazard", 1),
)


def generate_chain_of_grids(k: int, size: int = 3) -> tuple[TransitionSystem, MissionSpec]:
    """
    k square grids of side `size` linked corner to corner in a chain

    `home` labels the first corner of the first grid, `goal` the last corner of the
    last grid and `hazard` every grid center. The two hazard formulas conflict, so
    the search cannot stop early at the total reward.
    """
    if k < 1 or size < 2:
        raise ValueError(f"Need k >= 1 and size >= 2, got k={k}, size={size}")

    def name(g: int, x: int, y: int) -> str:
        return f"g{g}_{x}_{y}"

    states = [name(g, x, y) for g in range(k) for x in range(size) for y in range(size)]
    successors: dict[str, list[str]] = {s: [] for s in states}
    for g in range(k):
        for x in range(size):
            for y in range(size):
                for dx, dy in ((0, 1), (1, 0), (0, -1), (-1, 0)):
                    if 0 <= x + dx < size and 0 <= y + dy < size:
                        successors[name(g, x, y)].append(name(g, x + dx, y + dy))
        if g + 1 < k:
            successors[name(g, size - 1, size - 1)].append(name(g + 1, 0, 0))
            successors[name(g + 1, 0, 0)].append(name(g, size - 1, size - 1))
    center = size // 2
    labels = {name(0, 0, 0): frozenset({"home"}), name(k - 1, size - 1, size - 1): frozenset({"goal"})}
    for g in range(k):
        labels[name(g, center, center)] = labels.get(name(g, center, center), frozenset()) | {"hazard"}
    ts = TransitionSystem(
        tuple(states),
        states[0],
        {s: tuple(targets) for s, targets in successors.items()},
        ("home", "goal", "hazard"),
        labels,
    )
    spec = MissionSpec.from_formulas((parse_formula(text), reward, text) for text, reward in CHAIN_SPEC)
    return ts, spec
