"""Views package - Text renderers for the command line"""

from .automaton_view import dump_automaton, state_name
from .dot_view import to_dot
from .plan_view import PlanFile, serialize_plan, parse_plan_file, verdict_table, oracle_report

__all__ = [
    "dump_automaton",
    "state_name",
    "to_dot",
    "PlanFile",
    "serialize_plan",
    "parse_plan_file",
    "verdict_table",
    "oracle_report",
]
