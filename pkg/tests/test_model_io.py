import logging

import pytest

from models import ConfigurationError, LtlSyntaxError, ModelParseError, ModelValidationError
from services import load_model, parse_formula, parse_model, parse_spec, serialize_model, serialize_spec


MODEL = """\
# two rooms and a corridor
ap: home goal
states: s0 s1 s2
init: s0
label s0: home
label s2: goal
trans s0 -> s1
trans s1 -> s0
trans s1 -> s2   # one way
trans s2 -> s2
"""

SPEC = """\
reward 2 : F goal
reward 5 : G F home
reward 2 : G !goal
"""


class TestParseModel:
    def test_parses_declarations(self):
        ts = parse_model(MODEL)
        assert ts.states == ("s0", "s1", "s2")
        assert ts.initial == "s0"
        assert ts.propositions == ("home", "goal")
        assert ts.post("s1") == ("s0", "s2")
        assert ts.label("s0") == {"home"}
        assert ts.label("s1") == frozenset()
        assert ts.transition_count == 4

    def test_crlf_line_endings(self):
        assert parse_model(MODEL.replace("\n", "\r\n")) == parse_model(MODEL)

    def test_duplicate_transition_kept_once(self):
        ts = parse_model(MODEL + "trans s0 -> s1\n")
        assert ts.post("s0") == ("s1",)

    def test_deadlock_names_the_state(self):
        text = MODEL.replace("trans s2 -> s2\n", "")
        with pytest.raises(ModelValidationError) as info:
            parse_model(text)
        assert info.value.state == "s2"
        assert "s2" in info.value.diagnostic()

    def test_undeclared_state_reports_line(self):
        with pytest.raises(ModelParseError) as info:
            parse_model(MODEL + "trans s2 -> s9\n", "rooms.model")
        assert info.value.line == 11
        assert "rooms.model:11:" in info.value.message

    def test_undeclared_proposition(self):
        with pytest.raises(ModelParseError):
            parse_model(MODEL.replace("label s2: goal", "label s2: exit"))

    def test_unknown_directive(self):
        with pytest.raises(ModelParseError) as info:
            parse_model("ap: p\nstate: s0\n")
        assert info.value.line == 2

    def test_missing_init(self):
        with pytest.raises(ModelParseError):
            parse_model("ap: p\nstates: s0\ntrans s0 -> s0\n")

    def test_duplicate_state(self):
        with pytest.raises(ModelValidationError):
            parse_model("ap: p\nstates: s0 s0\ninit: s0\ntrans s0 -> s0\n")

    def test_serialized_model_parses_back(self):
        ts = parse_model(MODEL)
        assert parse_model(serialize_model(ts)) == ts

    def test_load_model_from_file(self, tmp_path):
        path = tmp_path / "rooms.model"
        path.write_text(MODEL, encoding="utf-8")
        assert load_model(path) == parse_model(MODEL)


class TestParseSpec:
    def test_sorted_by_reward_stably(self):
        spec = parse_spec(SPEC)
        assert spec.rewards == [5, 2, 2]
        assert [e.index for e in spec.entries] == [1, 0, 2]
        assert spec.total_reward == 9
        assert spec.formulas[0] == parse_formula("G F home")

    def test_original_order(self):
        spec = parse_spec(SPEC)
        assert [e.text for e in spec.original_order()] == ["F goal", "G F home", "G !goal"]

    def test_serialized_spec_keeps_original_order(self):
        assert serialize_spec(parse_spec(SPEC)) == SPEC

    def test_syntax_error_located_in_file(self):
        with pytest.raises(LtlSyntaxError) as info:
            parse_spec("reward 1 : F p\nreward 2 : G (p &\n", "m.spec")
        assert info.value.line == 2
        assert "m.spec" in info.value.message

    @pytest.mark.parametrize("line", ["reward x : p", "reward -1 : p", "rewards 1 : p", "reward 1 p"])
    def test_malformed_reward_lines(self, line):
        with pytest.raises(ModelParseError):
            parse_spec(line + "\n")

    def test_zero_reward_warns(self, caplog):
        with caplog.at_level(logging.WARNING, logger="LTLMVP"):
            parse_spec("reward 0 : F p\n")
        assert "reward 0" in caplog.text

    def test_lexicographic_rewards_follow_original_order(self):
        spec = parse_spec(SPEC).lexicographic()
        assert [e.reward for e in spec.original_order()] == [4, 2, 1]

    def test_lexicographic_overflow(self):
        text = "".join(f"reward 1 : F p{i}\n" for i in range(64))
        with pytest.raises(ConfigurationError):
            parse_spec(text).lexicographic()

    def test_alphabet_check(self):
        ts = parse_model(MODEL)
        with pytest.raises(ModelValidationError):
            parse_spec("reward 1 : F exit\n").check_alphabet(ts)
