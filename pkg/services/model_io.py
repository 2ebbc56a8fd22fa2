"""
Model IO - line-oriented model and mission specification files

Model file:
    ap: p q
    states: s0 s1
    init: s0
    label s0: p          (omitted means empty label)
    trans s0 -> s1

Spec file:
    reward 10 : F (p & F q)

Both accept '#' comments, blank lines and CRLF line endings.
"""

import logging
import re
from pathlib import Path
from typing import Optional

from models.errors import LtlSyntaxError, ModelParseError
from models.transition_system import MissionSpec, TransitionSystem
from services.ltl_parser import parse_formula


log = logging.getLogger("LTLMVP")

_PROPOSITION = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_STATE = re.compile(r"[^\s:#]+\Z")
_TRANS = re.compile(r"trans\s+(\S+)\s*->\s*(\S+)\Z")
_LABEL = re.compile(r"label\s+([^\s:]+)\s*:(.*)\Z")
_REWARD = re.compile(r"reward\s+(\S+)\s*:(.*)\Z")


def _content_lines(text: str):
    """(line number, stripped content) for every non-blank line, comments removed"""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content


def _names(value: str, pattern: re.Pattern, kind: str, number: int, source: str) -> list[str]:
    names = value.split()
    for name in names:
        if not pattern.match(name):
            raise ModelParseError(f"Invalid {kind} name {name!r}", number, source)
    return names


def parse_model(text: str, source: str = "") -> TransitionSystem:
    """
    Parse and validate a model file

    Args:
        text: File contents
        source: File name for diagnostics

    Returns:
        Validated TransitionSystem

    Raises:
        ModelParseError: Malformed line or reference to an undeclared name
        ModelValidationError: Duplicate state, deadlock state
    """
    propositions: list[str] = []
    states: list[str] = []
    initial: Optional[str] = None
    labels: dict[str, tuple[int, list[str]]] = {}
    transitions: list[tuple[int, str, str]] = []

    for number, line in _content_lines(text):
        if line.startswith("trans"):
            match = _TRANS.match(line)
            if not match:
                raise ModelParseError(f"Expected 'trans <state> -> <state>', got {line!r}", number, source)
            transitions.append((number, match.group(1), match.group(2)))
        elif line.startswith("label"):
            match = _LABEL.match(line)
            if not match:
                raise ModelParseError(f"Expected 'label <state>: <props>', got {line!r}", number, source)
            state = match.group(1)
            if state in labels:
                raise ModelParseError(f"State {state} is labeled twice", number, source)
            labels[state] = (number, _names(match.group(2), _PROPOSITION, "proposition", number, source))
        elif line.startswith("ap:"):
            propositions.extend(_names(line[3:], _PROPOSITION, "proposition", number, source))
        elif line.startswith("states:"):
            states.extend(_names(line[7:], _STATE, "state", number, source))
        elif line.startswith("init:"):
            if initial is not None:
                raise ModelParseError("Initial state declared twice", number, source)
            names = _names(line[5:], _STATE, "state", number, source)
            if len(names) != 1:
                raise ModelParseError("Expected exactly one initial state", number, source)
            initial = names[0]
        else:
            raise ModelParseError(f"Unknown directive {line.split()[0]!r}", number, source)

    if initial is None:
        raise ModelParseError("Missing 'init:' line", None, source)
    declared = set(states)
    alphabet = set(propositions)
    for state, (number, props) in labels.items():
        if state not in declared:
            raise ModelParseError(f"Label on undeclared state {state}", number, source)
        for prop in props:
            if prop not in alphabet:
                raise ModelParseError(f"Undeclared proposition {prop} on state {state}", number, source)
    successors: dict[str, list[str]] = {state: [] for state in states}
    for number, src, dst in transitions:
        for state in (src, dst):
            if state not in declared:
                raise ModelParseError(f"Transition references undeclared state {state}", number, source)
        if dst not in successors[src]:
            successors[src].append(dst)

    ts = TransitionSystem(
        states=tuple(states),
        initial=initial,
        successors={state: tuple(targets) for state, targets in successors.items()},
        propositions=tuple(propositions),
        labels={state: frozenset(props) for state, (_, props) in labels.items() if props},
    )
    log.debug(f"Parsed model with {len(ts.states)} states and {ts.transition_count} transitions")
    return ts


def serialize_model(ts: TransitionSystem) -> str:
    """Canonical model text; parse_model gives back an equal system"""
    order = {prop: idx for idx, prop in enumerate(ts.propositions)}
    lines = [
        f"ap: {' '.join(ts.propositions)}".rstrip(),
        f"states: {' '.join(ts.states)}",
        f"init: {ts.initial}",
    ]
    for state in ts.states:
        label = ts.label(state)
        if label:
            lines.append(f"label {state}: {' '.join(sorted(label, key=order.__getitem__))}")
    for state in ts.states:
        for target in ts.post(state):
            lines.append(f"trans {state} -> {target}")
    return "\n".join(lines) + "\n"


def parse_spec(text: str, source: str = "") -> MissionSpec:
    """
    Parse a specification file of `reward <n> : <formula>` lines

    Raises:
        ModelParseError: Malformed line or reward
        LtlSyntaxError: Formula outside the grammar, located in the file
    """
    items = []
    for number, line in _content_lines(text):
        match = _REWARD.match(line)
        if not match:
            raise ModelParseError(f"Expected 'reward <int> : <formula>', got {line!r}", number, source)
        try:
            reward = int(match.group(1))
        except ValueError:
            raise ModelParseError(f"Reward {match.group(1)!r} is not an integer", number, source) from None
        if reward < 0:
            raise ModelParseError(f"Reward must be non-negative, got {reward}", number, source)
        formula_text = match.group(2).strip()
        try:
            formula = parse_formula(formula_text)
        except LtlSyntaxError as e:
            offset = line.index(":") + 1 + (len(match.group(2)) - len(match.group(2).lstrip()))
            raise LtlSyntaxError(
                f"{source or '<input>'}: {e.message.rsplit(' at line', 1)[0]}", line, number, offset + e.column
            ) from None
        items.append((formula, reward, formula_text))
    return MissionSpec.from_formulas(items)


def serialize_spec(spec: MissionSpec) -> str:
    return "".join(f"reward {e.reward} : {e.text}\n" for e in spec.original_order())


def load_model(path: str | Path) -> TransitionSystem:
    path = Path(path)
    return parse_model(path.read_text(encoding="utf-8"), str(path))


def load_spec(path: str | Path) -> MissionSpec:
    path = Path(path)
    return parse_spec(path.read_text(encoding="utf-8"), str(path))
