"""
Automaton View - stable textual dumps

One record per line, states in index order, transitions in construction order.
"""

from models.automaton import BuchiAutomaton, GeneralizedBuchiAutomaton
from models.weighted_model import WeightedBuchiAutomaton, WeightedProductAutomaton

Dumpable = GeneralizedBuchiAutomaton | BuchiAutomaton | WeightedBuchiAutomaton | WeightedProductAutomaton


def state_name(state) -> str:
    """Compact rendering; tuple states become (a,b)"""
    if isinstance(state, tuple):
        return f"({','.join(state_name(part) for part in state)})"
    return str(state)


def _dump_omega(automaton: GeneralizedBuchiAutomaton | BuchiAutomaton) -> list[str]:
    kind = "ba" if isinstance(automaton, BuchiAutomaton) else "gba"
    lines = [
        f"kind: {kind}",
        f"states: {len(automaton.states)}",
        f"initial: {state_name(automaton.initial)}",
    ]
    lines += [f"state {state_name(s)}" for s in automaton.states]
    for state in automaton.states:
        for t in automaton.successors[state]:
            lines.append(f"trans {state_name(t.source)} -> {state_name(t.target)} [{t.guard}]")
    order = automaton.state_index
    for idx, accepting in enumerate(automaton.acceptance):
        members = " ".join(state_name(s) for s in sorted(accepting, key=order.__getitem__))
        lines.append(f"accept {idx}: {members}".rstrip())
    return lines


def _dump_weighted(wba: WeightedBuchiAutomaton) -> list[str]:
    lines = [
        "kind: weighted-ba",
        f"states: {len(wba.states)}",
        f"initial: {wba.initial}",
        f"rewards: {' '.join(map(str, wba.rewards))}".rstrip(),
    ]
    lines += [f"state {idx}: {state_name(qs)} {tag}" for idx, (qs, tag) in enumerate(wba.states)]
    for out in wba.successors:
        for t in out:
            lines.append(f"trans {t.source} -> {t.target} [{t.guard}] +{t.weight}")
    lines.append(f"accept: {' '.join(map(str, sorted(wba.accepting)))}")
    return lines


def _dump_product(product: WeightedProductAutomaton) -> list[str]:
    lines = [
        "kind: product",
        f"states: {len(product)}",
        f"initial: {product.initial}",
        f"total-reward: {product.total_reward}",
    ]
    lines += [
        f"state {idx}: {s} {b} {product.tags[idx]}" for idx, (s, b) in enumerate(product.states)
    ]
    for source, out in enumerate(product.successors):
        for target, weight in out:
            lines.append(f"trans {source} -> {target} +{weight}")
    lines.append(f"accept: {' '.join(map(str, sorted(product.accepting)))}")
    return lines


def dump_automaton(automaton: Dumpable) -> str:
    """
    Byte-stable dump of any automaton the pipeline builds

    Args:
        automaton: GBA, BA, weighted BA or weighted product

    Returns:
        Newline-terminated text
    """
    if isinstance(automaton, WeightedProductAutomaton):
        lines = _dump_product(automaton)
    elif isinstance(automaton, WeightedBuchiAutomaton):
        lines = _dump_weighted(automaton)
    else:
        lines = _dump_omega(automaton)
    return "\n".join(lines) + "\n"
