"""
Result Model Layer - MVVM Pattern
Outcomes the view model hands to the command line view
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Optional

from .errors import LTLMVPError
from .plan_model import LassoPlan, OracleResult, TraceScore


class ResultStatus(str, Enum):
    """Status of operation results"""
    COMPLETE = "COMPLETE"
    ERROR = "ERROR"
    MISMATCH = "MISMATCH"


@dataclass
class _Result:
    status: ResultStatus = ResultStatus.COMPLETE
    error: Optional[LTLMVPError] = None
    message: str = ""
    warnings: list[str] = field(default_factory=list)

    @property
    def is_success(self) -> bool:
        """Check if operation was successful"""
        return self.status == ResultStatus.COMPLETE

    @property
    def exit_code(self) -> int:
        if self.status == ResultStatus.COMPLETE:
            return 0
        if self.error is not None:
            return self.error.exit_code
        return 3 if self.status == ResultStatus.MISMATCH else 1


@dataclass
class PlanResult(_Result):
    """Result of planning, optionally cross-checked by the oracle"""
    plan: Optional[LassoPlan] = None
    oracle: Optional[OracleResult] = None
    total_reward: int = 0
    written: list[Path] = field(default_factory=list)
    # Intermediate automata, kept for product-level trace output
    artifacts: Any = None


@dataclass
class TranslateResult(_Result):
    """Result of translating a single formula"""
    dump: str = ""
    dot: str = ""


@dataclass
class CheckResult(_Result):
    """Result of re-scoring a plan file"""
    score: Optional[TraceScore] = None
    claimed_reward: Optional[int] = None


@dataclass
class GenerateResult(_Result):
    """Result of writing a generated model/spec pair"""
    model_path: Optional[Path] = None
    spec_path: Optional[Path] = None
    states: int = 0
    formulas: int = 0
