"""
Scenario Model
Rescue-mission configuration: grid, vehicles, hostile targets, friendlies
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import ConfigurationError
from .settings import DEFAULT_MAX_STATES


Cell = tuple[int, int]

ENGAGE_SACRIFICE = "sacrifice"
ENGAGE_SURVIVE = "engage"
ENGAGEMENT_MODES = (ENGAGE_SURVIVE, ENGAGE_SACRIFICE)

DEFAULT_REWARDS = {"pickup": 10, "ordering": 10, "survival": 1}


@dataclass(frozen=True)
class Vehicle:
    name: str
    start: Cell
    carrier: bool = False


@dataclass(frozen=True)
class Target:
    """Hostile unit threatening every cell within `range` (Chebyshev distance)"""
    name: str
    cell: Cell
    range: int = 1

    def covers(self, cell: Cell) -> bool:
        return max(abs(cell[0] - self.cell[0]), abs(cell[1] - self.cell[1])) <= self.range


@dataclass(frozen=True)
class Friendly:
    name: str
    cell: Cell


@dataclass(frozen=True)
class RescueConfig:
    """
    Validated rescue scenario

    `vulnerability` maps a vehicle to the targets that destroy it when it enters
    their firing range; `engagement` maps (vehicle, target) to the mode used when
    the vehicle enters the target cell. `ordering` lists (earlier, later) friendly
    pairs: once a carrier has visited the earlier one it must never visit the later.
    """
    width: int
    height: int
    base: Cell
    vehicles: tuple[Vehicle, ...]
    targets: tuple[Target, ...] = ()
    friendlies: tuple[Friendly, ...] = ()
    vulnerability: dict[str, frozenset[str]] = field(default_factory=dict)
    engagement: dict[tuple[str, str], str] = field(default_factory=dict)
    ordering: tuple[tuple[str, str], ...] = ()
    rewards: dict[str, int] = field(default_factory=lambda: dict(DEFAULT_REWARDS))
    max_states: int = DEFAULT_MAX_STATES

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ConfigurationError(f"Grid must be at least 1x1, got {self.width}x{self.height}")
        if not self.vehicles:
            raise ConfigurationError("Scenario needs at least one vehicle")
        self._check_cell(self.base, "base")
        names = [v.name for v in self.vehicles] + [t.name for t in self.targets] + [f.name for f in self.friendlies]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ConfigurationError(f"Unit names must be unique, got duplicates {duplicates}")
        for vehicle in self.vehicles:
            self._check_cell(vehicle.start, vehicle.name)
        for target in self.targets:
            self._check_cell(target.cell, target.name)
            if target.range < 0:
                raise ConfigurationError(f"Target {target.name} has negative range")
        for friendly in self.friendlies:
            self._check_cell(friendly.cell, friendly.name)
        vehicles = {v.name for v in self.vehicles}
        targets = {t.name for t in self.targets}
        friendlies = {f.name for f in self.friendlies}
        for vehicle, threats in self.vulnerability.items():
            if vehicle not in vehicles or not threats <= targets:
                raise ConfigurationError(f"Vulnerability entry {vehicle}: {sorted(threats)} references undeclared units")
        for (vehicle, target), mode in self.engagement.items():
            if vehicle not in vehicles or target not in targets:
                raise ConfigurationError(f"Engagement {vehicle} -> {target} references undeclared units")
            if mode not in ENGAGEMENT_MODES:
                raise ConfigurationError(f"Engagement mode must be one of {ENGAGEMENT_MODES}, got {mode!r}")
        for first, later in self.ordering:
            if first not in friendlies or later not in friendlies:
                raise ConfigurationError(f"Ordering {first} before {later} references undeclared friendlies")
        for key, reward in self.rewards.items():
            if reward < 0:
                raise ConfigurationError(f"Reward {key} must be non-negative, got {reward}")

    def _check_cell(self, cell: Cell, owner: str):
        x, y = cell
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise ConfigurationError(f"{owner} at {cell} lies outside the {self.width}x{self.height} grid")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RescueConfig":
        """Build from the JSON scenario layout"""
        try:
            width, height = data["grid"]
            vehicles = tuple(
                Vehicle(v["name"], tuple(v["start"]), bool(v.get("carrier", False)))
                for v in data.get("vehicles", [])
            )
            targets = tuple(
                Target(t["name"], tuple(t["cell"]), int(t.get("range", 1))) for t in data.get("targets", [])
            )
            friendlies = tuple(
                Friendly(f["name"], tuple(f["cell"])) for f in data.get("friendlies", [])
            )
            vulnerability = {k: frozenset(v) for k, v in data.get("vulnerable", {}).items()}
            engagement = {
                (vehicle, target): mode
                for vehicle, entries in data.get("engage", {}).items()
                for target, mode in entries.items()
            }
            ordering = tuple((first, later) for first, later in data.get("ordering", []))
            rewards = {**DEFAULT_REWARDS, **data.get("rewards", {})}
            return cls(
                width=int(width),
                height=int(height),
                base=tuple(data.get("base", (0, 0))),
                vehicles=vehicles,
                targets=targets,
                friendlies=friendlies,
                vulnerability=vulnerability,
                engagement=engagement,
                ordering=ordering,
                rewards=rewards,
                max_states=int(data.get("max_states", DEFAULT_MAX_STATES)),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigurationError(f"Malformed scenario: {e!r}") from None

    @classmethod
    def load(cls, path: str | Path) -> "RescueConfig":
        path = Path(path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"{path}:{e.lineno}: {e.msg}") from None
        return cls.from_dict(data)
