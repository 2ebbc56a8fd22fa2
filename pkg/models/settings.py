"""
Settings Model
Tunable limits and switches shared by the translator, the planner and the oracle
"""

from dataclasses import dataclass


# Guard rail against the exponential blow-up of tableau translation and products
DEFAULT_MAX_STATES = 100_000

# Desk-size caps for the subset-enumeration oracle
DEFAULT_ORACLE_MAX_TS_STATES = 12
DEFAULT_ORACLE_MAX_FORMULAS = 4


@dataclass(frozen=True)
class PlannerSettings:
    """Planner configuration built from command line flags"""
    max_states: int = DEFAULT_MAX_STATES
    oracle_max_ts_states: int = DEFAULT_ORACLE_MAX_TS_STATES
    oracle_max_formulas: int = DEFAULT_ORACLE_MAX_FORMULAS
    reuse_inner_visits: bool = True
    lexicographic: bool = False
    product_trace: bool = False
