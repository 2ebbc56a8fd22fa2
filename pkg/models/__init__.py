"""Models package - Immutable domain types, results and errors"""

from .automaton import (
    State,
    TransitionGuard,
    TRUE_GUARD,
    Transition,
    GeneralizedBuchiAutomaton,
    BuchiAutomaton,
)
from .errors import (
    LTLMVPError,
    LtlSyntaxError,
    ModelParseError,
    ModelValidationError,
    ConfigurationError,
    ResourceLimitError,
    RewardsNotSortedError,
    BlockingAutomatonError,
    MalformedRunError,
    NonAcceptingRunError,
    InvalidLassoError,
    EmptyCycleError,
    EmptyProductError,
    EmptyIntersectionError,
    OracleCapExceededError,
    RewardMismatchError,
    InputFileError,
)
from .formula import Formula, Top, Atom, Not, And, Next, Until, TRUE, format_formula
from .plan_model import Fragment, Lasso, FormulaVerdict, TraceScore, LassoPlan, OracleResult
from .result_model import ResultStatus, PlanResult, TranslateResult, CheckResult, GenerateResult
from .scenario_model import Vehicle, Target, Friendly, RescueConfig
from .settings import PlannerSettings
from .transition_system import TransitionSystem, SpecEntry, MissionSpec
from .weighted_model import (
    ComponentTag,
    HUB,
    WeightedTransition,
    WeightedBuchiAutomaton,
    WeightedProductAutomaton,
)

__all__ = [
    "State",
    "TransitionGuard",
    "TRUE_GUARD",
    "Transition",
    "GeneralizedBuchiAutomaton",
    "BuchiAutomaton",
    "LTLMVPError",
    "LtlSyntaxError",
    "ModelParseError",
    "ModelValidationError",
    "ConfigurationError",
    "ResourceLimitError",
    "RewardsNotSortedError",
    "BlockingAutomatonError",
    "MalformedRunError",
    "NonAcceptingRunError",
    "InvalidLassoError",
    "EmptyCycleError",
    "EmptyProductError",
    "EmptyIntersectionError",
    "OracleCapExceededError",
    "RewardMismatchError",
    "InputFileError",
    "Formula",
    "Top",
    "Atom",
    "Not",
    "And",
    "Next",
    "Until",
    "TRUE",
    "format_formula",
    "Fragment",
    "Lasso",
    "FormulaVerdict",
    "TraceScore",
    "LassoPlan",
    "OracleResult",
    "ResultStatus",
    "PlanResult",
    "TranslateResult",
    "CheckResult",
    "GenerateResult",
    "Vehicle",
    "Target",
    "Friendly",
    "RescueConfig",
    "PlannerSettings",
    "TransitionSystem",
    "SpecEntry",
    "MissionSpec",
    "ComponentTag",
    "HUB",
    "WeightedTransition",
    "WeightedBuchiAutomaton",
    "WeightedProductAutomaton",
]
