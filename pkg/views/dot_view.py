"""
DOT View - Graphviz export of automata

Accepting states are double circles; component tags render as a `j.l` suffix,
non-zero weights as `+w` edge labels.
"""

from models.automaton import BuchiAutomaton, GeneralizedBuchiAutomaton
from models.weighted_model import WeightedBuchiAutomaton, WeightedProductAutomaton

from .automaton_view import Dumpable, state_name


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _header(name: str) -> list[str]:
    return [
        f"digraph {_quote(name)} {{",
        "  rankdir=LR;",
        '  node [shape="circle" fontname="Helvetica"];',
        '  "init" [shape="point"];',
    ]


def to_dot(automaton: Dumpable, name: str = "automaton") -> str:
    """
    Render an automaton as a DOT digraph

    Args:
        automaton: GBA, BA, weighted BA or weighted product
        name: Graph name

    Returns:
        DOT source text
    """
    lines = _header(name)
    if isinstance(automaton, (GeneralizedBuchiAutomaton, BuchiAutomaton)):
        accepting = set().union(*automaton.acceptance)
        ids = automaton.state_index
        for state in automaton.states:
            shape = ' shape="doublecircle"' if state in accepting else ""
            lines.append(f"  {ids[state]} [label={_quote(state_name(state))}{shape}];")
        lines.append(f"  \"init\" -> {ids[automaton.initial]};")
        for t in automaton.transitions:
            lines.append(f"  {ids[t.source]} -> {ids[t.target]} [label={_quote(str(t.guard))}];")
    elif isinstance(automaton, WeightedBuchiAutomaton):
        for idx, (qs, tag) in enumerate(automaton.states):
            shape = ' shape="doublecircle"' if tag.is_hub else ""
            lines.append(f"  {idx} [label={_quote(f'{idx} [{tag}]')}{shape}];")
        lines.append(f"  \"init\" -> {automaton.initial};")
        for t in automaton.transitions:
            label = str(t.guard) + (f" +{t.weight}" if t.weight else "")
            lines.append(f"  {t.source} -> {t.target} [label={_quote(label)}];")
    else:
        for idx, (s, _) in enumerate(automaton.states):
            tag = automaton.tags[idx]
            shape = ' shape="doublecircle"' if tag.is_hub else ""
            lines.append(f"  {idx} [label={_quote(f'{s} [{tag}]')}{shape}];")
        lines.append(f"  \"init\" -> {automaton.initial};")
        for source, out in enumerate(automaton.successors):
            for target, weight in out:
                label = f" [label={_quote(f'+{weight}')}]" if weight else ""
                lines.append(f"  {source} -> {target}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"
