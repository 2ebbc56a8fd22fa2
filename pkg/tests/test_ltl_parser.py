import pytest

from models import TRUE, And, Atom, LtlSyntaxError, Next, Not, Until, format_formula
from models.formula import always, eventually, false, implies, lor
from services import parse_formula


p, q, r = Atom("p"), Atom("q"), Atom("r")


class TestParseFormula:
    def test_constants(self):
        assert parse_formula("true") == TRUE
        assert parse_formula("false") == false()

    def test_atom(self):
        assert parse_formula("p") == p
        assert parse_formula("  pF1_x ") == Atom("pF1_x")

    def test_temporal_sugar_desugars(self):
        assert parse_formula("F p") == Until(TRUE, p)
        assert parse_formula("G p") == Not(Until(TRUE, Not(p)))
        assert parse_formula("X p") == Next(p)

    def test_pickup_sequencing(self):
        expected = eventually(And(Atom("pF1"), eventually(Atom("pBase"))))
        assert parse_formula("F ( pF1 & F pBase )") == expected

    def test_and_binds_tighter_than_or(self):
        assert parse_formula("p & q | r") == lor(And(p, q), r)
        assert parse_formula("p | q & r") == lor(p, And(q, r))

    def test_implication_is_right_associative(self):
        assert parse_formula("p -> q -> r") == implies(p, implies(q, r))

    def test_until_is_right_associative(self):
        assert parse_formula("p U q U r") == Until(p, Until(q, r))

    def test_unary_binds_tighter_than_until(self):
        assert parse_formula("!p U q") == Until(Not(p), q)
        assert parse_formula("G F p") == always(eventually(p))

    def test_multiline_input(self):
        assert parse_formula("p &\nq") == And(p, q)

    def test_operator_names_only_match_whole_words(self):
        assert parse_formula("F1") == Atom("F1")
        assert parse_formula("Gx") == Atom("Gx")

    @pytest.mark.parametrize("text", [
        "G (p -> F q)",
        "p U (q & X !r)",
        "G F p -> G F q",
        "F (p & F q) & G !r",
        "true U false",
    ])
    def test_format_parses_back(self, text):
        formula = parse_formula(text)
        assert parse_formula(format_formula(formula)) == formula


class TestSyntaxErrors:
    def test_unknown_character_reports_column(self):
        with pytest.raises(LtlSyntaxError) as info:
            parse_formula("p $ q")
        assert (info.value.line, info.value.column) == (1, 3)
        assert info.value.caret() == "p $ q\n  ^"
        assert info.value.diagnostic().startswith("error[syntax]:")

    def test_unexpected_token(self):
        with pytest.raises(LtlSyntaxError) as info:
            parse_formula("p q")
        assert info.value.column == 3

    def test_error_on_second_line(self):
        with pytest.raises(LtlSyntaxError) as info:
            parse_formula("p &\n& q")
        assert info.value.line == 2
        assert info.value.column == 1

    @pytest.mark.parametrize("text", ["", "   ", "p &", "(p", "X", "G (p -> )"])
    def test_incomplete_formulas(self, text):
        with pytest.raises(LtlSyntaxError):
            parse_formula(text)

    def test_unbalanced_parenthesis(self):
        with pytest.raises(LtlSyntaxError):
            parse_formula("p)")


class TestFormulaModel:
    def test_size_counts_core_operators(self):
        assert parse_formula("p").size == 0
        assert parse_formula("G p").size == 3
        assert parse_formula("p & X q").size == 2

    def test_atoms(self):
        assert parse_formula("G (p -> F q) & true").atoms == {"p", "q"}

    def test_subformulas_children_first(self):
        formula = parse_formula("p U (p & q)")
        nodes = formula.subformulas()
        assert nodes[-1] == formula
        assert nodes.index(p) < nodes.index(And(p, q))
        assert len(nodes) == len(set(nodes))
