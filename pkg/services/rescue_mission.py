"""
Rescue Mission - joint transition system and mission specification for a grid scenario

Each step moves one active vehicle to a neighboring cell or lets the whole system
idle. Entering a target cell engages it; entering the firing range of a target the
vehicle is vulnerable to destroys the vehicle. Both effects are irreversible.
Carriers pick up waiting friendlies on arrival and deliver them at the base.
"""

import logging
import time
from collections import deque

from models.errors import ConfigurationError, ResourceLimitError
from models.scenario_model import ENGAGE_SACRIFICE, Cell, RescueConfig
from models.transition_system import MissionSpec, TransitionSystem
from services.ltl_parser import parse_formula


log = logging.getLogger("LTLMVP")

WAITING = -1
DELIVERED = -2
MOVES = ((0, 1), (1, 0), (0, -1), (-1, 0))

# positions, active flags, target alive flags, friendly status (WAITING, DELIVERED or carrier index)
JointState = tuple[tuple[Cell, ...], tuple[bool, ...], tuple[bool, ...], tuple[int, ...]]


def at_friendly(vehicle: str, friendly: str) -> str:
    return f"p_{vehicle}_{friendly}"


def at_base(vehicle: str) -> str:
    return f"p_{vehicle}_Base"


def alive(vehicle: str) -> str:
    return f"a_{vehicle}"


class _RescueDynamics:
    def __init__(self, config: RescueConfig):
        self.config = config
        self.vehicles = config.vehicles
        self.targets = config.targets
        self.friendlies = config.friendlies

    def settle(self, positions, active, targets_alive, status, k: int) -> JointState:
        """Apply the effects of vehicle k arriving on its cell"""
        vehicle = self.vehicles[k]
        cell = positions[k]
        threats = self.config.vulnerability.get(vehicle.name, frozenset())
        active = list(active)
        targets_alive = list(targets_alive)
        status = list(status)
        for t, target in enumerate(self.targets):
            if not (active[k] and targets_alive[t] and target.cell == cell):
                continue
            mode = self.config.engagement.get((vehicle.name, target.name))
            if mode is not None:
                targets_alive[t] = False
                if mode == ENGAGE_SACRIFICE:
                    active[k] = False
            elif target.name in threats:
                active[k] = False
        if active[k] and any(
            targets_alive[t] and target.name in threats and target.covers(cell)
            for t, target in enumerate(self.targets)
        ):
            active[k] = False
        if active[k] and vehicle.carrier:
            for j, friendly in enumerate(self.friendlies):
                if status[j] == WAITING and friendly.cell == cell:
                    status[j] = k
            if cell == self.config.base:
                status = [DELIVERED if s == k else s for s in status]
        return tuple(positions), tuple(active), tuple(targets_alive), tuple(status)

    def initial(self) -> JointState:
        state = (
            tuple(v.start for v in self.vehicles),
            (True,) * len(self.vehicles),
            (True,) * len(self.targets),
            (WAITING,) * len(self.friendlies),
        )
        for k in range(len(self.vehicles)):
            state = self.settle(*state, k)
        return state

    def successors(self, state: JointState) -> list[JointState]:
        positions, active, targets_alive, status = state
        out: dict[JointState, None] = {}
        for k in range(len(self.vehicles)):
            if not active[k]:
                continue
            x, y = positions[k]
            for dx, dy in MOVES:
                cell = (x + dx, y + dy)
                if 0 <= cell[0] < self.config.width and 0 <= cell[1] < self.config.height:
                    moved = positions[:k] + (cell,) + positions[k + 1:]
                    out.setdefault(self.settle(moved, active, targets_alive, status, k), None)
        out.setdefault(state, None)
        return list(out)

    def label(self, state: JointState) -> frozenset[str]:
        positions, active, _, _ = state
        props = set()
        for k, vehicle in enumerate(self.vehicles):
            if not active[k]:
                continue
            props.add(alive(vehicle.name))
            if positions[k] == self.config.base:
                props.add(at_base(vehicle.name))
            for friendly in self.friendlies:
                if positions[k] == friendly.cell:
                    props.add(at_friendly(vehicle.name, friendly.name))
        return frozenset(props)

    def name(self, state: JointState) -> str:
        positions, active, targets_alive, status = state
        parts = [
            f"{v.name}@{x},{y}{'' if on else '!'}"
            for v, (x, y), on in zip(self.vehicles, positions, active)
        ]
        parts += [f"{t.name}{'+' if up else '-'}" for t, up in zip(self.targets, targets_alive)]
        for friendly, s in zip(self.friendlies, status):
            where = "w" if s == WAITING else "d" if s == DELIVERED else self.vehicles[s].name
            parts.append(f"{friendly.name}={where}")
        return ";".join(parts)

    def propositions(self) -> tuple[str, ...]:
        props = []
        for vehicle in self.vehicles:
            props.append(alive(vehicle.name))
            props.append(at_base(vehicle.name))
            props.extend(at_friendly(vehicle.name, f.name) for f in self.friendlies)
        return tuple(props)


def mission_formulas(config: RescueConfig) -> list[tuple[str, int]]:
    """Formula texts with rewards: pickups, visiting orders, then survival"""
    rewards = config.rewards
    carriers = [v.name for v in config.vehicles if v.carrier]
    formulas = []
    for carrier in carriers:
        for friendly in config.friendlies:
            formulas.append(
                (f"F ({at_friendly(carrier, friendly.name)} & F {at_base(carrier)})", rewards["pickup"])
            )
    for carrier in carriers:
        for first, later in config.ordering:
            formulas.append(
                (f"G ({at_friendly(carrier, first)} -> G !{at_friendly(carrier, later)})", rewards["ordering"])
            )
    for vehicle in config.vehicles:
        formulas.append((f"G {alive(vehicle.name)} & F {at_base(vehicle.name)}", rewards["survival"]))
    return formulas


def generate_rescue_mission(config: RescueConfig) -> tuple[TransitionSystem, MissionSpec]:
    """
    Build the joint transition system and the prioritized specification

    Args:
        config: Validated scenario

    Returns:
        (TransitionSystem, MissionSpec); every state has at least its idle self-loop

    Raises:
        ConfigurationError: Unit names unusable as proposition names
        ResourceLimitError: Joint state space above config.max_states
    """
    for unit in config.vehicles + config.friendlies:
        if not unit.name.isidentifier():
            raise ConfigurationError(f"Unit name {unit.name!r} must be an identifier")
    start_time = time.time()
    dynamics = _RescueDynamics(config)
    initial = dynamics.initial()
    ids = {initial: 0}
    order = [initial]
    edges: list[list[int]] = []
    queue = deque([initial])
    while queue:
        state = queue.popleft()
        targets = []
        for succ in dynamics.successors(state):
            if succ not in ids:
                if len(order) >= config.max_states:
                    raise ResourceLimitError(f"Rescue mission exceeds the cap of {config.max_states} states")
                ids[succ] = len(order)
                order.append(succ)
                queue.append(succ)
            targets.append(ids[succ])
        edges.append(targets)

    names = [dynamics.name(state) for state in order]
    labels = {}
    for name, state in zip(names, order):
        label = dynamics.label(state)
        if label:
            labels[name] = label
    ts = TransitionSystem(
        states=tuple(names),
        initial=names[0],
        successors={names[i]: tuple(names[j] for j in targets) for i, targets in enumerate(edges)},
        propositions=dynamics.propositions(),
        labels=labels,
    )
    spec = MissionSpec.from_formulas(
        (parse_formula(text), reward, text) for text, reward in mission_formulas(config)
    )
    log.info(
        f"Took {time.time() - start_time:.4f} seconds to generate rescue mission "
        f"({len(ts.states)} states, {ts.transition_count} transitions, {len(spec)} formulas)"
    )
    return ts, spec
