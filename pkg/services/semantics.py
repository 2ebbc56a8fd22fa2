"""
LTL Semantics - direct evaluation of formulas on ultimately periodic words
"""

from typing import Sequence

from models.errors import EmptyCycleError
from models.formula import And, Atom, Formula, Next, Not, Top, Until


def ltl_eval_lasso(
    formula: Formula,
    prefix: Sequence[frozenset[str]],
    cycle: Sequence[frozenset[str]],
) -> bool:
    """
    Whether the word prefix · cycle^ω satisfies a formula

    Subformulas are evaluated bottom-up over the finitely many distinct positions;
    the successor of the last position wraps to the start of the cycle. Until is
    the least fixpoint of u = right | (left & X u).

    Args:
        formula: Core formula
        prefix: Labels read once
        cycle: Labels repeated forever

    Returns:
        True when position 0 satisfies the formula
    """
    if not cycle:
        raise EmptyCycleError("Lasso word needs a non-empty cycle")
    word = [frozenset(letter) for letter in list(prefix) + list(cycle)]
    size = len(word)
    loop_start = len(prefix)
    succ = [i + 1 if i + 1 < size else loop_start for i in range(size)]

    values: dict[Formula, list[bool]] = {}
    for node in formula.subformulas():
        if isinstance(node, Top):
            values[node] = [True] * size
        elif isinstance(node, Atom):
            values[node] = [node.name in letter for letter in word]
        elif isinstance(node, Not):
            values[node] = [not v for v in values[node.child]]
        elif isinstance(node, And):
            left, right = values[node.left], values[node.right]
            values[node] = [a and b for a, b in zip(left, right)]
        elif isinstance(node, Next):
            child = values[node.child]
            values[node] = [child[succ[i]] for i in range(size)]
        elif isinstance(node, Until):
            values[node] = _until(values[node.left], values[node.right], succ)
        else:
            raise TypeError(f"Unknown formula node: {type(node).__name__}")
    return values[formula][0]


def _until(left: list[bool], right: list[bool], succ: list[int]) -> list[bool]:
    result = list(right)
    changed = True
    while changed:
        changed = False
        for i in reversed(range(len(result))):
            if not result[i] and left[i] and result[succ[i]]:
                result[i] = True
                changed = True
    return result
