"""Services package - Parsing, translation, construction, search and generators"""

from .logging_handler import DiagnosticHandler
from .ltl_parser import parse_formula
from .model_io import (
    parse_model,
    serialize_model,
    parse_spec,
    serialize_spec,
    load_model,
    load_spec,
)
from .oracle import (
    intersect,
    find_accepting_lasso,
    brute_force_plan,
    enumerate_lassos,
    enumerate_words,
    optimal_subsets,
)
from .planner import (
    SearchTable,
    PlanningArtifacts,
    longest_cycle_search,
    propagate,
    find_path,
    find_arbitrary_trace,
    plan,
    prepare_product,
    plan_instance,
)
from .random_instances import FORMULA_TEMPLATES, generate_random_instance, generate_chain_of_grids
from .rescue_mission import generate_rescue_mission
from .scoring import trace_reward, validate_lasso
from .semantics import ltl_eval_lasso
from .translator import (
    ltl_to_gba,
    degeneralize,
    make_nonblocking,
    is_nonblocking,
    translate,
    accepts_lasso,
)
from .weighted_builder import (
    build_weighted_ba,
    build_product,
    fragments,
    cycle_fragments,
    run_reward,
    product_run_reward,
)

__all__ = [
    "DiagnosticHandler",
    "parse_formula",
    "parse_model",
    "serialize_model",
    "parse_spec",
    "serialize_spec",
    "load_model",
    "load_spec",
    "intersect",
    "find_accepting_lasso",
    "brute_force_plan",
    "enumerate_lassos",
    "enumerate_words",
    "optimal_subsets",
    "SearchTable",
    "PlanningArtifacts",
    "longest_cycle_search",
    "propagate",
    "find_path",
    "find_arbitrary_trace",
    "plan",
    "prepare_product",
    "plan_instance",
    "FORMULA_TEMPLATES",
    "generate_random_instance",
    "generate_chain_of_grids",
    "generate_rescue_mission",
    "trace_reward",
    "validate_lasso",
    "ltl_eval_lasso",
    "ltl_to_gba",
    "degeneralize",
    "make_nonblocking",
    "is_nonblocking",
    "translate",
    "accepts_lasso",
    "build_weighted_ba",
    "build_product",
    "fragments",
    "cycle_fragments",
    "run_reward",
    "product_run_reward",
]
