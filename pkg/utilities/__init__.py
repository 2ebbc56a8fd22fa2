"""Utilities package - Helper functions"""

from .resource_path import get_resource_path, default_scenario_path

__all__ = [
    "get_resource_path",
    "default_scenario_path",
]
