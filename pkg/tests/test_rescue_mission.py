import json

import pytest

from models import ConfigurationError, PlannerSettings, RescueConfig, ResourceLimitError
from services import brute_force_plan, generate_rescue_mission, plan_instance
from services.rescue_mission import mission_formulas
from utilities import default_scenario_path


def corridor(**overrides) -> dict:
    """3x1 corridor: base at the west end, one carrier, friendlies further east"""
    data = {
        "grid": [3, 1],
        "base": [0, 0],
        "vehicles": [{"name": "V1", "start": [0, 0], "carrier": True}],
        "friendlies": [{"name": "F1", "cell": [2, 0]}],
    }
    data.update(overrides)
    return data


class TestRescueConfig:
    def test_from_dict_defaults(self):
        config = RescueConfig.from_dict(corridor())
        assert (config.width, config.height) == (3, 1)
        assert config.vehicles[0].carrier
        assert config.rewards == {"pickup": 10, "ordering": 10, "survival": 1}

    def test_bundled_scenario_loads(self):
        config = RescueConfig.load(default_scenario_path())
        assert [v.name for v in config.vehicles] == ["V1", "V2"]
        assert config.engagement == {("V1", "T1"): "sacrifice"}
        assert config.vulnerability == {"V2": frozenset({"T1"})}

    @pytest.mark.parametrize("overrides", [
        {"base": [5, 0]},
        {"vehicles": []},
        {"friendlies": [{"name": "V1", "cell": [1, 0]}]},
        {"targets": [{"name": "T1", "cell": [1, 0], "range": -1}]},
        {"engage": {"V1": {"T9": "engage"}}},
        {"targets": [{"name": "T1", "cell": [1, 0]}], "engage": {"V1": {"T1": "bomb"}}},
        {"vulnerable": {"V7": ["T1"]}},
        {"ordering": [["F1", "F9"]]},
        {"rewards": {"pickup": -1}},
        {"grid": [3]},
    ])
    def test_invalid_configurations(self, overrides):
        with pytest.raises(ConfigurationError):
            RescueConfig.from_dict(corridor(**overrides))

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\"grid\": [3, 1],", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            RescueConfig.load(path)


class TestGenerateRescueMission:
    def test_labels_and_idle_loops(self):
        ts, spec = generate_rescue_mission(RescueConfig.from_dict(corridor()))
        assert ts.label(ts.initial) == {"a_V1", "p_V1_Base"}
        assert all(ts.has_transition(s, s) for s in ts.states)
        assert ts.propositions == ("a_V1", "p_V1_Base", "p_V1_F1")

    def test_pickup_and_survival(self):
        ts, spec = generate_rescue_mission(RescueConfig.from_dict(corridor()))
        assert [e.text for e in spec.original_order()] == [
            "F (p_V1_F1 & F p_V1_Base)",
            "G a_V1 & F p_V1_Base",
        ]
        result = plan_instance(ts, spec)
        assert result.reward == 11
        assert any(state.endswith("F1=d") for state in result.trace.positions())

    def test_ordering_constraint_blocks_a_pickup(self):
        config = RescueConfig.from_dict(corridor(
            grid=[3, 1],
            friendlies=[{"name": "F1", "cell": [1, 0]}, {"name": "F2", "cell": [2, 0]}],
            ordering=[["F2", "F1"]],
            rewards={"ordering": 15},
        ))
        ts, spec = generate_rescue_mission(config)
        assert "G (p_V1_F2 -> G !p_V1_F1)" in [e.text for e in spec.entries]
        result = plan_instance(ts, spec)
        assert result.reward == 10 + 15 + 1
        verdicts = {v.text: v.satisfied for v in result.verdicts}
        assert not verdicts["F (p_V1_F2 & F p_V1_Base)"]

    def test_vulnerable_vehicle_dies_in_range(self):
        config = RescueConfig.from_dict(corridor(
            targets=[{"name": "T1", "cell": [2, 0], "range": 0}],
            friendlies=[{"name": "F1", "cell": [1, 0]}],
            vulnerable={"V1": ["T1"]},
        ))
        ts, _ = generate_rescue_mission(config)
        lost = [s for s in ts.states if "V1@2,0!" in s]
        assert lost
        assert all("a_V1" not in ts.label(s) for s in lost)
        assert all(ts.post(s) == (s,) for s in lost)

    def test_vehicle_starting_in_range_is_lost(self):
        config = RescueConfig.from_dict(corridor(
            targets=[{"name": "T1", "cell": [1, 0], "range": 1}],
            vulnerable={"V1": ["T1"]},
        ))
        ts, _ = generate_rescue_mission(config)
        assert ts.initial.startswith("V1@0,0!")
        assert ts.states == (ts.initial,)

    def test_engaged_target_stays_down(self):
        config = RescueConfig.from_dict(corridor(
            targets=[{"name": "T1", "cell": [1, 0], "range": 0}],
            engage={"V1": {"T1": "engage"}},
            vulnerable={"V1": ["T1"]},
        ))
        ts, _ = generate_rescue_mission(config)
        assert "V1@1,0;T1-;F1=w" in ts.states
        beyond = [s for s in ts.states if s.startswith("V1@2,0")]
        assert beyond
        assert all(";T1-" in s for s in beyond)

    def test_sacrifice_destroys_vehicle_and_target(self):
        data = corridor(
            vehicles=[
                {"name": "V1", "start": [0, 0], "carrier": False},
                {"name": "V2", "start": [0, 0], "carrier": True},
            ],
            targets=[{"name": "T1", "cell": [1, 0], "range": 0}],
            engage={"V1": {"T1": "sacrifice"}},
        )
        ts, _ = generate_rescue_mission(RescueConfig.from_dict(data))
        assert any(s.startswith("V1@1,0!") and ";T1-" in s for s in ts.states)
        assert not any(s.startswith("V1@1,0;") for s in ts.states)

    def test_formulas_per_carrier(self):
        data = corridor(vehicles=[
            {"name": "V1", "start": [0, 0], "carrier": True},
            {"name": "V2", "start": [0, 0], "carrier": False},
        ])
        texts = [text for text, _ in mission_formulas(RescueConfig.from_dict(data))]
        assert texts == [
            "F (p_V1_F1 & F p_V1_Base)",
            "G a_V1 & F p_V1_Base",
            "G a_V2 & F p_V2_Base",
        ]

    def test_state_cap(self):
        with pytest.raises(ResourceLimitError):
            generate_rescue_mission(RescueConfig.from_dict(corridor(max_states=2)))

    def test_names_must_be_identifiers(self):
        data = corridor(friendlies=[{"name": "F-1", "cell": [2, 0]}])
        with pytest.raises(ConfigurationError):
            generate_rescue_mission(RescueConfig.from_dict(data))

    def test_round_trip_through_json(self, tmp_path):
        path = tmp_path / "corridor.json"
        path.write_text(json.dumps(corridor()), encoding="utf-8")
        assert RescueConfig.load(path) == RescueConfig.from_dict(corridor())


def oracle_settings(ts) -> PlannerSettings:
    return PlannerSettings(oracle_max_ts_states=len(ts.states))


class TestAgainstOracle:
    def test_single_vehicle_square(self):
        config = RescueConfig.from_dict(corridor(grid=[2, 2], friendlies=[{"name": "F1", "cell": [1, 1]}]))
        ts, spec = generate_rescue_mission(config)
        planned = plan_instance(ts, spec)
        assert planned.reward == brute_force_plan(ts, spec, oracle_settings(ts)).reward == spec.total_reward

    def test_lethal_route_costs_the_escort(self):
        data = corridor(
            vehicles=[
                {"name": "V1", "start": [0, 0], "carrier": False},
                {"name": "V2", "start": [0, 0], "carrier": True},
            ],
            targets=[{"name": "T1", "cell": [1, 0], "range": 0}],
            engage={"V1": {"T1": "sacrifice"}},
            vulnerable={"V2": ["T1"]},
        )
        ts, spec = generate_rescue_mission(RescueConfig.from_dict(data))
        planned = plan_instance(ts, spec)
        oracle = brute_force_plan(ts, spec, oracle_settings(ts))
        assert planned.reward == oracle.reward == spec.total_reward - 1
        assert set(oracle.targeted) | set(oracle.incidental) == set(planned.satisfied_indices)
        assert [v.text for v in planned.verdicts if not v.satisfied] == ["G a_V1 & F p_V1_Base"]

    @pytest.mark.slow
    def test_default_scenario_sacrifices_the_uav(self):
        config = RescueConfig.load(default_scenario_path())
        ts, spec = generate_rescue_mission(config)
        assert spec.total_reward == 12
        planned = plan_instance(ts, spec)
        oracle = brute_force_plan(ts, spec, oracle_settings(ts))
        assert planned.reward == oracle.reward == 11
        unsatisfied = [v.text for v in planned.verdicts if not v.satisfied]
        assert unsatisfied == ["G a_V1 & F p_V1_Base"]
