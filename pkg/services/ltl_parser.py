"""
LTL Parser - ply lexer and LALR grammar for the ASCII LTL syntax

Grammar:
    formula ::= atom | true | false | ( formula )
              | unop formula | formula binop formula

Operators by decreasing precedence:
    unary   !  X  F  G
    until   U   (right associative)
    and     &
    or      |
    imply   ->  (right associative)

Derived operators are desugared while parsing, so the result only holds the
core constructors true, atom, !, &, X, U.
"""

import threading

from ply import lex as ply_lex
from ply import yacc as ply_yacc

from models.errors import LtlSyntaxError
from models.formula import (
    TRUE, And, Atom, Formula, Next, Not, Until,
    always, eventually, false, implies, lor,
)


reserved = {
    "true": "TRUE",
    "false": "FALSE",
    "X": "NEXT",
    "F": "EVENTUALLY",
    "G": "ALWAYS",
    "U": "UNTIL",
}

tokens = (
    "ATOM",
    "NOT",
    "AND",
    "OR",
    "IMPLIES",
    "LPAREN",
    "RPAREN",
) + tuple(reserved.values())

t_IMPLIES = r"->"
t_NOT = r"!"
t_AND = r"&"
t_OR = r"\|"
t_LPAREN = r"\("
t_RPAREN = r"\)"
t_ignore = " \t\r"


def t_ATOM(t):
    r"[a-zA-Z_][a-zA-Z0-9_]*"
    t.type = reserved.get(t.value, "ATOM")
    return t


def t_newline(t):
    r"\n+"
    t.lexer.lineno += len(t.value)


def t_error(t):
    line, column = _location(t.lexer.lexdata, t.lexpos)
    raise LtlSyntaxError(f"Undeclared character {t.value[0]!r}", t.lexer.lexdata, line, column)


precedence = (
    ("right", "IMPLIES"),
    ("left", "OR"),
    ("left", "AND"),
    ("right", "UNTIL"),
    ("right", "NOT", "NEXT", "EVENTUALLY", "ALWAYS"),
)


def p_formula_binary(p):
    """formula : formula IMPLIES formula
               | formula OR formula
               | formula AND formula
               | formula UNTIL formula"""
    op = p.slice[2].type
    if op == "IMPLIES":
        p[0] = implies(p[1], p[3])
    elif op == "OR":
        p[0] = lor(p[1], p[3])
    elif op == "AND":
        p[0] = And(p[1], p[3])
    else:
        p[0] = Until(p[1], p[3])


def p_formula_unary(p):
    """formula : NOT formula
               | NEXT formula
               | EVENTUALLY formula
               | ALWAYS formula"""
    op = p.slice[1].type
    if op == "NOT":
        p[0] = Not(p[2])
    elif op == "NEXT":
        p[0] = Next(p[2])
    elif op == "EVENTUALLY":
        p[0] = eventually(p[2])
    else:
        p[0] = always(p[2])


def p_formula_group(p):
    """formula : LPAREN formula RPAREN"""
    p[0] = p[2]


def p_formula_atom(p):
    """formula : ATOM"""
    p[0] = Atom(p[1])


def p_formula_constant(p):
    """formula : TRUE
               | FALSE"""
    p[0] = TRUE if p.slice[1].type == "TRUE" else false()


class _EndOfInput(Exception):
    pass


def p_error(p):
    if p is None:
        raise _EndOfInput()
    text = p.lexer.lexdata
    line, column = _location(text, p.lexpos)
    raise LtlSyntaxError(f"Unexpected token {p.value!r}", text, line, column)


def _location(text: str, pos: int) -> tuple[int, int]:
    """1-based (line, column) of a character offset"""
    line = text.count("\n", 0, pos) + 1
    column = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, column


_lexer = ply_lex.lex(errorlog=ply_lex.NullLogger())
_parser = ply_yacc.yacc(debug=False, write_tables=False, errorlog=ply_yacc.NullLogger())
# LRParser keeps its stacks on the instance
_parser_lock = threading.Lock()


def parse_formula(text: str) -> Formula:
    """
    Parse an ASCII LTL formula into its desugared core syntax tree

    Args:
        text: Formula text, e.g. "G (p -> F q)"

    Returns:
        Core Formula (true, atoms, !, &, X, U only)

    Raises:
        LtlSyntaxError: On characters outside the alphabet or malformed input
    """
    lexer = _lexer.clone()
    lexer.lineno = 1
    try:
        with _parser_lock:
            result = _parser.parse(text, lexer=lexer)
    except _EndOfInput:
        line, column = _location(text, len(text))
        raise LtlSyntaxError("Unexpected end of formula", text, line, column) from None
    if result is None:
        raise LtlSyntaxError("Empty formula", text, 1, 1)
    return result
