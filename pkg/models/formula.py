"""
Formula Model
LTL abstract syntax over atomic propositions. Only the six core constructors exist as
node types; derived operators are helper functions that desugar on construction.
"""

from dataclasses import dataclass
from functools import cached_property


class Formula:
    """Base class of the core LTL syntax tree"""

    @property
    def children(self) -> tuple["Formula", ...]:
        return ()

    @cached_property
    def size(self) -> int:
        """Number of operators in the formula"""
        own = 0 if isinstance(self, (Top, Atom)) else 1
        return own + sum(child.size for child in self.children)

    @cached_property
    def atoms(self) -> frozenset[str]:
        """Atomic propositions used by the formula"""
        if isinstance(self, Atom):
            return frozenset((self.name,))
        found: frozenset[str] = frozenset()
        for child in self.children:
            found |= child.atoms
        return found

    def subformulas(self) -> list["Formula"]:
        """All subformulas in post-order (children before parents, no duplicates)"""
        seen: dict[Formula, None] = {}

        def visit(node: Formula):
            for child in node.children:
                visit(child)
            seen.setdefault(node, None)

        visit(self)
        return list(seen)

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, eq=True)
class Top(Formula):
    pass


@dataclass(frozen=True, eq=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True, eq=True)
class Not(Formula):
    child: Formula

    @property
    def children(self) -> tuple[Formula, ...]:
        return (self.child,)


@dataclass(frozen=True, eq=True)
class And(Formula):
    left: Formula
    right: Formula

    @property
    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Next(Formula):
    child: Formula

    @property
    def children(self) -> tuple[Formula, ...]:
        return (self.child,)


@dataclass(frozen=True, eq=True)
class Until(Formula):
    left: Formula
    right: Formula

    @property
    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)


TRUE = Top()


def false() -> Formula:
    return Not(TRUE)


def lor(left: Formula, right: Formula) -> Formula:
    return Not(And(Not(left), Not(right)))


def implies(left: Formula, right: Formula) -> Formula:
    return Not(And(left, Not(right)))


def eventually(child: Formula) -> Formula:
    return Until(TRUE, child)


def always(child: Formula) -> Formula:
    return Not(eventually(Not(child)))


def format_formula(formula: Formula) -> str:
    """
    Canonical ASCII rendering of a core formula

    Binary operators are always parenthesized, so parsing the result gives back
    an equal tree.
    """
    if isinstance(formula, Top):
        return "true"
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Not):
        return f"!{format_formula(formula.child)}"
    if isinstance(formula, Next):
        return f"X {format_formula(formula.child)}"
    if isinstance(formula, And):
        return f"({format_formula(formula.left)} & {format_formula(formula.right)})"
    if isinstance(formula, Until):
        return f"({format_formula(formula.left)} U {format_formula(formula.right)})"
    raise TypeError(f"Unknown formula node: {type(formula).__name__}")
