"""
Error Model - Exception hierarchy
Every failure carries a stable machine code and the process exit status the CLI maps it to
"""

from typing import Optional


class LTLMVPError(Exception):
    """Base class for all planner errors"""
    code = "internal"
    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def diagnostic(self) -> str:
        """Single-line machine-parseable diagnostic"""
        return f"error[{self.code}]: {self.message}"


class LtlSyntaxError(LTLMVPError):
    """Formula text outside the LTL grammar"""
    code = "syntax"
    exit_code = 2

    def __init__(self, message: str, text: str = "", line: int = 1, column: int = 1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.text = text
        self.line = line
        self.column = column

    def caret(self) -> str:
        """Offending line with a caret under the error column"""
        lines = self.text.splitlines() or [""]
        source = lines[min(self.line, len(lines)) - 1]
        return f"{source}\n{' ' * (self.column - 1)}^"


class ModelParseError(LTLMVPError):
    code = "parse"
    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None, source: str = ""):
        location = f"{source or '<input>'}:{line}: " if line is not None else ""
        super().__init__(f"{location}{message}")
        self.line = line
        self.source = source


class ModelValidationError(LTLMVPError):
    code = "validation"
    exit_code = 2

    def __init__(self, message: str, state: Optional[str] = None):
        super().__init__(message)
        self.state = state


class ConfigurationError(LTLMVPError):
    code = "config"
    exit_code = 2


class ResourceLimitError(LTLMVPError):
    code = "resource-limit"
    exit_code = 2


class RewardsNotSortedError(LTLMVPError):
    code = "rewards-order"
    exit_code = 2


class BlockingAutomatonError(LTLMVPError):
    code = "blocking"
    exit_code = 2


class MalformedRunError(LTLMVPError):
    code = "malformed-run"
    exit_code = 2


class NonAcceptingRunError(LTLMVPError):
    code = "non-accepting"
    exit_code = 2


class InvalidLassoError(LTLMVPError):
    code = "invalid-lasso"
    exit_code = 2


class EmptyCycleError(LTLMVPError):
    code = "empty-cycle"
    exit_code = 2


class EmptyProductError(LTLMVPError):
    code = "empty-product"
    exit_code = 2


class EmptyIntersectionError(LTLMVPError):
    code = "empty-intersection"
    exit_code = 2


class OracleCapExceededError(LTLMVPError):
    code = "oracle-cap"
    exit_code = 2


class RewardMismatchError(LTLMVPError):
    code = "reward-mismatch"
    exit_code = 3


class InputFileError(LTLMVPError):
    """Input or output file could not be read or written"""
    code = "io"
    exit_code = 2
