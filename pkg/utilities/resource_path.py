"""
Resource Path Utility
Locates bundled scenario files both from a source checkout and from a frozen build
"""

import sys
from pathlib import Path


def get_base_path() -> Path:
    """
    Get the base path for bundled resources.

    Returns:
        - From a source checkout: the repository root
        - From a frozen executable: the directory holding the executable
    """
    if getattr(sys, 'frozen', False):
        return Path(sys.executable).parent
    return Path(__file__).parent.parent


def get_resource_path(relative_path: str) -> Path:
    """
    Get absolute path to a bundled resource.

    Args:
        relative_path: Path relative to the base directory

    Returns:
        Absolute Path object to the resource

    Example:
        >>> get_resource_path("scenarios/rescue_4x4.json")
        Path('/path/to/LTLMVP/scenarios/rescue_4x4.json')
    """
    return get_base_path() / relative_path


DEFAULT_SCENARIO = "scenarios/rescue_4x4.json"


def default_scenario_path() -> Path:
    return get_resource_path(DEFAULT_SCENARIO)
