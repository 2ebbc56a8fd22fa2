"""ViewModels package - Presentation logic"""

from .mission_viewmodel import MissionViewModel

__all__ = [
    "MissionViewModel",
]
